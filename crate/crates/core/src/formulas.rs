//! Closed forms and bounds for 2-rainbow domination numbers, and the explicit
//! optimal labelings of `C(n; {1, 4})`.

use alloc::string::String;

use crate::assignment::RainbowAssignment;
use crate::error::{Error, Result};

/// An integer interval known to contain a domination number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundResult {
    pub lower: u64,
    pub upper: u64,
}

impl BoundResult {
    pub fn exact(value: u64) -> Self {
        BoundResult { lower: value, upper: value }
    }

    pub fn interval(lower: u64, upper: u64) -> Self {
        debug_assert!(lower <= upper);
        BoundResult { lower, upper }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, value: u64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// `γ_r2(C(n; {1, 4})) = ⌈n/3⌉ + α` with its residue bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct C14FormulaValue {
    pub n: u64,
    pub residue: u64,
    pub alpha: u64,
    pub value: u64,
}

fn require(what: &'static str, value: u64, min: u64) -> Result<()> {
    if value < min {
        Err(Error::OutOfDomain { what, value, min })
    } else {
        Ok(())
    }
}

/// `⌈n/3⌉ + α`, where `α` is 0 for `n ≡ 0`, 2 for `n ≡ 4` and 1 otherwise
/// (mod 6). Stated for `n >= 9`.
pub fn gamma_r2_c14(n: u64) -> Result<C14FormulaValue> {
    require("gamma_r2(C(n; {1,4}))", n, 9)?;
    let residue = n % 6;
    let alpha = match residue {
        0 => 0,
        4 => 2,
        _ => 1,
    };
    Ok(C14FormulaValue { n, residue, alpha, value: n.div_ceil(3) + alpha })
}

const C14_BLOCK: &str = "100200";

/// The residue-class labeling of `C(n; {1, 4})`: repeated `100200` blocks
/// followed by a fixed tail (with a `300200` head when `n ≡ 3 (mod 6)`).
pub fn construct_c14(n: u64) -> Result<RainbowAssignment> {
    require("construct_c14", n, 9)?;
    let (head, tail) = match n % 6 {
        0 => ("", ""),
        1 => ("", "1002201"),
        2 => ("", "10020210"),
        3 => ("300200", "100"),
        4 => ("", "1212"),
        _ => ("", "10220"),
    };
    let body = n as usize - head.len() - tail.len();
    debug_assert_eq!(body % C14_BLOCK.len(), 0);
    let mut text = String::with_capacity(n as usize);
    text.push_str(head);
    for _ in 0..body / C14_BLOCK.len() {
        text.push_str(C14_BLOCK);
    }
    text.push_str(tail);
    RainbowAssignment::parse(&text, 2)
}

/// `γ_r2(C(n; {1, 3}))` for `n >= 7`: with `n = 5m + a`, `2m` if `a = 0`,
/// `2m + 1` if `a ∈ {1, 2}` and `2m + 2` if `a ∈ {3, 4}`.
pub fn gamma_r2_c13(n: u64) -> Result<u64> {
    require("gamma_r2(C(n; {1,3}))", n, 7)?;
    let m = n / 5;
    Ok(match n % 5 {
        0 => 2 * m,
        1 | 2 => 2 * m + 1,
        _ => 2 * m + 2,
    })
}

/// `γ_r2(P(n, 2))`: `⌈4n/5⌉` for `n ≡ 0, 3, 4, 9 (mod 10)`, one more otherwise.
pub fn gamma_r2_pn2(n: u64) -> Result<u64> {
    require("gamma_r2(P(n, 2))", n, 3)?;
    let base = (4 * n).div_ceil(5);
    Ok(match n % 10 {
        0 | 3 | 4 | 9 => base,
        _ => base + 1,
    })
}

/// Published values and bounds for `γ_r2(P(5k, k))`.
///
/// For `k <= 3` the listed small cases are returned as given:
/// `P(5, 1) = 5`, `P(10, 2) = 10` and `13 <= P(15, 3) <= 14`.
pub fn gamma_r2_p5kk(k: u64) -> Result<BoundResult> {
    require("gamma_r2(P(5k, k))", k, 1)?;
    Ok(match k {
        1 => BoundResult::exact(5),
        2 => BoundResult::exact(10),
        3 => BoundResult::interval(13, 14),
        _ => match k % 10 {
            2 | 8 => BoundResult::exact(4 * k),
            5 | 9 => BoundResult::exact(4 * k + 1),
            1 | 6 | 7 => BoundResult::interval(4 * k + 1, 4 * k + 2),
            _ => BoundResult::interval(4 * k + 1, 4 * k + 3),
        },
    })
}

/// `⌈2n / (K + 2)⌉`, a lower bound on `γ_r2` of any `K`-regular graph on `n`
/// vertices.
pub fn regular_lower_bound(n: u64, degree: u64) -> u64 {
    (2 * n).div_ceil(degree + 2)
}
