//! Row-by-row comparison of closed forms, constructions and exact solvers on
//! `C(n; {1, 4})` and `C(n; {1, 3})`.

use std::fmt;
use std::io;
use std::str::FromStr;

use serde::Serialize;

use rainbow_core::formulas::{construct_c14, gamma_r2_c13, gamma_r2_c14};
use rainbow_core::rdf::is_krdf;
use rainbow_core::solvers::{solve_bruteforce, TransferDp, DEFAULT_GUARD};
use rainbow_core::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyFamily {
    C14,
    C13,
}

impl VerifyFamily {
    pub fn jump(self) -> usize {
        match self {
            VerifyFamily::C14 => 4,
            VerifyFamily::C13 => 3,
        }
    }

    /// Smallest `n` covered by the closed form.
    pub fn min_n(self) -> u64 {
        match self {
            VerifyFamily::C14 => 9,
            VerifyFamily::C13 => 7,
        }
    }

    pub fn formula(self, n: u64) -> Result<u64> {
        match self {
            VerifyFamily::C14 => Ok(gamma_r2_c14(n)?.value),
            VerifyFamily::C13 => gamma_r2_c13(n),
        }
    }
}

impl FromStr for VerifyFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c14" => Ok(VerifyFamily::C14),
            "c13" => Ok(VerifyFamily::C13),
            _ => Err(Error::InvalidParameter(format!("unknown family {s:?}, expected c14 or c13"))),
        }
    }
}

impl fmt::Display for VerifyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyFamily::C14 => "c14",
            VerifyFamily::C13 => "c13",
        })
    }
}

/// Which sources a row compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracles {
    pub formula: bool,
    pub construction: bool,
    pub dp: bool,
    pub exhaustive: bool,
}

impl Oracles {
    pub const ALL: Oracles =
        Oracles { formula: true, construction: true, dp: true, exhaustive: true };
}

impl Default for Oracles {
    fn default() -> Self {
        Oracles::ALL
    }
}

impl FromStr for Oracles {
    type Err = Error;

    /// Comma-separated subset of `formula`, `construction`, `dp`,
    /// `exhaustive` (alias `brute`).
    fn from_str(s: &str) -> Result<Self> {
        let mut o = Oracles { formula: false, construction: false, dp: false, exhaustive: false };
        for name in s.split(',').map(str::trim) {
            match name {
                "formula" => o.formula = true,
                "construction" => o.construction = true,
                "dp" => o.dp = true,
                "exhaustive" | "brute" => o.exhaustive = true,
                _ => return Err(Error::InvalidParameter(format!("unknown oracle {name:?}"))),
            }
        }
        Ok(o)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Agree,
    Disagree,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Agree => "agree",
            Status::Disagree => "disagree",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub n: u64,
    pub family: VerifyFamily,
    pub formula: Option<u64>,
    pub construction_weight: Option<u64>,
    pub dp: Option<u64>,
    pub exhaustive: Option<u64>,
    pub status: Status,
    pub notes: String,
}

impl VerifyRow {
    fn values(&self) -> impl Iterator<Item = u64> + '_ {
        [self.formula, self.construction_weight, self.dp, self.exhaustive].into_iter().flatten()
    }
}

/// One row per `n` in `lo..=hi`, in order.
///
/// A row agrees when every computed value is equal and every construction is
/// a valid labeling. Rows with fewer than two values are `skipped`. The
/// exhaustive oracle only runs under the brute-force size guard; above it the
/// row notes the skip.
pub fn verify_range(
    family: VerifyFamily,
    lo: u64,
    hi: u64,
    oracles: Oracles,
) -> Result<Vec<VerifyRow>> {
    if lo < family.min_n() {
        return Err(Error::OutOfDomain {
            what: "verify range start",
            value: lo,
            min: family.min_n(),
        });
    }
    if hi < lo {
        return Err(Error::InvalidParameter(format!("empty range {lo}..={hi}")));
    }
    let dp = if oracles.dp {
        let solver = TransferDp::new(family.jump())?;
        Some(solver.sweep(lo as usize..=hi as usize)?)
    } else {
        None
    };

    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        let graph = Graph::circulant(n as usize, &[1, family.jump()])?;
        let mut notes = Vec::new();
        let formula = if oracles.formula { Some(family.formula(n)?) } else { None };

        let mut construction_valid = true;
        let construction_weight = match (oracles.construction, family) {
            (true, VerifyFamily::C14) => {
                let f = construct_c14(n)?;
                construction_valid = is_krdf(&graph, &f);
                if !construction_valid {
                    notes.push("construction is not a valid 2RDF".to_string());
                }
                Some(u64::from(f.weight()))
            }
            (true, VerifyFamily::C13) => {
                notes.push("no construction for c13".to_string());
                None
            }
            (false, _) => None,
        };

        let dp_value = dp.as_ref().map(|rows| u64::from(rows[(n - lo) as usize].optimum));

        let exhaustive = if !oracles.exhaustive {
            None
        } else if n as usize * 2 <= DEFAULT_GUARD {
            Some(u64::from(solve_bruteforce(&graph, 2)?.optimum))
        } else {
            notes.push(format!("exhaustive skipped: n*k > {DEFAULT_GUARD}"));
            None
        };

        let mut row = VerifyRow {
            n,
            family,
            formula,
            construction_weight,
            dp: dp_value,
            exhaustive,
            status: Status::Skipped,
            notes: String::new(),
        };
        let values: Vec<u64> = row.values().collect();
        row.status = if !construction_valid || values.windows(2).any(|w| w[0] != w[1]) {
            Status::Disagree
        } else if values.len() < 2 {
            Status::Skipped
        } else {
            Status::Agree
        };
        if row.status == Status::Disagree && values.len() >= 2 {
            let min = values.iter().min().unwrap();
            let max = values.iter().max().unwrap();
            if min != max {
                notes.push(format!("values range from {min} to {max}"));
            }
        }
        row.notes = notes.join("; ");
        rows.push(row);
    }
    Ok(rows)
}

/// True unless some row disagrees.
pub fn all_agree(rows: &[VerifyRow]) -> bool {
    rows.iter().all(|r| r.status != Status::Disagree)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    n: u64,
    family: String,
    formula: Option<u64>,
    construction_weight: Option<u64>,
    dp: Option<u64>,
    exhaustive: Option<u64>,
    status: String,
    notes: &'a str,
}

/// CSV with header `n,family,formula,construction_weight,dp,exhaustive,status,notes`;
/// absent values are empty fields.
pub fn write_csv<W: io::Write>(rows: &[VerifyRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(CsvRow {
            n: r.n,
            family: r.family.to_string(),
            formula: r.formula,
            construction_weight: r.construction_weight,
            dp: r.dp,
            exhaustive: r.exhaustive,
            status: r.status.to_string(),
            notes: &r.notes,
        })?;
    }
    if rows.is_empty() {
        w.write_record([
            "n",
            "family",
            "formula",
            "construction_weight",
            "dp",
            "exhaustive",
            "status",
            "notes",
        ])?;
    }
    w.flush()?;
    Ok(())
}
