//! Color-set labelings `f: V -> 2^{1..k}`.
//!
//! A label is stored as a bitmask where bit `c - 1` stands for color `c`.
//! For `k <= 3` the text form is one decimal digit per vertex holding that
//! mask, so for two colors `0, 1, 2, 3` read as `∅, {1}, {2}, {1, 2}`. For
//! larger `k` the masks are written comma-separated.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};

/// Largest supported number of colors.
pub const MAX_COLORS: u8 = 8;

/// A subset of `{1..=8}` as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub const fn from_bits(bits: u8) -> Self {
        ColorSet(bits)
    }

    /// `{1..=k}`.
    pub const fn full(k: u8) -> Self {
        ColorSet(((1u16 << k) - 1) as u8)
    }

    pub const fn singleton(color: u8) -> Self {
        ColorSet(1 << (color - 1))
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, color: u8) -> bool {
        color >= 1 && color <= 8 && self.0 & (1 << (color - 1)) != 0
    }

    pub const fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub const fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Colors in increasing order.
    pub fn colors(self) -> impl Iterator<Item = u8> {
        (1..=8u8).filter(move |&c| self.contains(c))
    }

    fn swap(self, c1: u8, c2: u8) -> ColorSet {
        let (b1, b2) = (1u8 << (c1 - 1), 1u8 << (c2 - 1));
        let mut bits = self.0 & !(b1 | b2);
        if self.0 & b1 != 0 {
            bits |= b2;
        }
        if self.0 & b2 != 0 {
            bits |= b1;
        }
        ColorSet(bits)
    }
}

/// Formats as `{}` / `{1}` / `{1,2}`.
impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (i, c) in self.colors().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{c}")?;
        }
        f.write_char('}')
    }
}

/// Per-vertex color sets over `{1..=k}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RainbowAssignment {
    colors: u8,
    labels: Vec<ColorSet>,
}

impl RainbowAssignment {
    pub fn new(colors: u8, labels: Vec<ColorSet>) -> Result<Self> {
        check_colors(colors)?;
        let full = ColorSet::full(colors);
        if let Some(v) = labels.iter().position(|l| !l.is_subset(full)) {
            return Err(Error::invalid(format!(
                "label {} of vertex {v} is not a subset of 1..={colors}",
                labels[v].bits()
            )));
        }
        Ok(RainbowAssignment { colors, labels })
    }

    /// All vertices labeled `∅`.
    pub fn empty(colors: u8, n: usize) -> Result<Self> {
        Self::new(colors, alloc::vec![ColorSet::EMPTY; n])
    }

    /// All vertices labeled `{1..=k}`.
    pub fn full(colors: u8, n: usize) -> Result<Self> {
        check_colors(colors)?;
        Ok(RainbowAssignment { colors, labels: alloc::vec![ColorSet::full(colors); n] })
    }

    pub(crate) fn from_bits_unchecked(colors: u8, bits: &[u8]) -> Self {
        RainbowAssignment { colors, labels: bits.iter().map(|&b| ColorSet(b)).collect() }
    }

    pub fn colors(&self) -> u8 {
        self.colors
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[ColorSet] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> ColorSet {
        self.labels[v]
    }

    /// `w(f) = Σ |f(v)|`.
    pub fn weight(&self) -> u32 {
        self.labels.iter().map(|l| l.len()).sum()
    }

    /// Vertex `v` receives the old label of `v - shift (mod n)`.
    pub fn rotate(&self, shift: i64) -> RainbowAssignment {
        let n = self.labels.len();
        if n == 0 {
            return self.clone();
        }
        let s = shift.rem_euclid(n as i64) as usize;
        let labels = (0..n).map(|v| self.labels[(v + n - s) % n]).collect();
        RainbowAssignment { colors: self.colors, labels }
    }

    /// Exchanges colors `c1` and `c2` in every label.
    pub fn swap_colors(&self, c1: u8, c2: u8) -> Result<RainbowAssignment> {
        for c in [c1, c2] {
            if c == 0 || c > self.colors {
                return Err(Error::invalid(format!("color {c} outside 1..={}", self.colors)));
            }
        }
        let labels = self.labels.iter().map(|l| l.swap(c1, c2)).collect();
        Ok(RainbowAssignment { colors: self.colors, labels })
    }

    /// Parses the digit (k <= 3) or comma-separated (k > 3) form.
    pub fn parse(text: &str, colors: u8) -> Result<Self> {
        check_colors(colors)?;
        let limit = 1u16 << colors;
        let mut labels = Vec::with_capacity(text.len());
        if colors <= 3 {
            for (i, ch) in text.chars().enumerate() {
                match ch.to_digit(10) {
                    Some(d) if (d as u16) < limit => labels.push(ColorSet(d as u8)),
                    _ => {
                        return Err(Error::parse(
                            i,
                            format!("{ch:?} is not a label digit below {limit}"),
                        ))
                    }
                }
            }
        } else if !text.is_empty() {
            let mut offset = 0;
            for field in text.split(',') {
                match field.parse::<u16>() {
                    Ok(d) if d < limit && field.bytes().all(|b| b.is_ascii_digit()) => {
                        labels.push(ColorSet(d as u8))
                    }
                    _ => {
                        return Err(Error::parse(
                            offset,
                            format!("{field:?} is not a label below {limit}"),
                        ))
                    }
                }
                offset += field.len() + 1;
            }
        }
        Ok(RainbowAssignment { colors, labels })
    }

    /// Inverse of [`RainbowAssignment::parse`].
    pub fn format(&self) -> String {
        let mut out = String::with_capacity(self.labels.len() * 2);
        for (i, l) in self.labels.iter().enumerate() {
            if self.colors > 3 && i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", l.bits());
        }
        out
    }
}

impl fmt::Display for RainbowAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

fn check_colors(colors: u8) -> Result<()> {
    if colors == 0 || colors > MAX_COLORS {
        Err(Error::UnsupportedParameters(format!(
            "number of colors must be in 1..={MAX_COLORS}, got {colors}"
        )))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> RainbowAssignment {
        RainbowAssignment::parse(s, 2).unwrap()
    }

    #[test]
    fn digit_convention() {
        assert_eq!(p("3").labels(), &[ColorSet::full(2)]);
        let f = p("100200");
        let one = ColorSet::singleton(1);
        let two = ColorSet::singleton(2);
        let e = ColorSet::EMPTY;
        assert_eq!(f.labels(), &[one, e, e, two, e, e]);
    }

    #[test]
    fn digit_out_of_range() {
        assert_eq!(
            RainbowAssignment::parse("4", 2).unwrap_err(),
            Error::parse(0, "'4' is not a label digit below 4")
        );
        assert!(matches!(
            RainbowAssignment::parse("0102x", 2),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(RainbowAssignment::parse("2", 1), Err(Error::Parse { position: 0, .. })));
    }

    #[test]
    fn comma_form_for_many_colors() {
        let f = RainbowAssignment::parse("0,15,8", 4).unwrap();
        assert_eq!(f.weight(), 5);
        assert_eq!(f.format(), "0,15,8");
        assert!(matches!(
            RainbowAssignment::parse("0,16", 4),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(RainbowAssignment::parse("", 4).unwrap().is_empty());
    }

    #[test]
    fn weights() {
        assert_eq!(RainbowAssignment::empty(2, 9).unwrap().weight(), 0);
        assert_eq!(RainbowAssignment::full(2, 7).unwrap().weight(), 14);
        assert_eq!(p("100200100200").weight(), 4);
    }

    #[test]
    fn rotation() {
        assert_eq!(p("100200100").rotate(0), p("100200100"));
        assert_eq!(p("100200100").rotate(3), p("100100200"));
        assert_eq!(p("100200100").rotate(-6), p("100200100").rotate(3));
    }

    #[test]
    fn color_swap() {
        assert_eq!(p("100200100").swap_colors(1, 2).unwrap(), p("200100200"));
        assert_eq!(p("3030").swap_colors(1, 2).unwrap(), p("3030"));
        assert!(p("1").swap_colors(1, 3).is_err());
        assert!(p("1").swap_colors(0, 1).is_err());
    }

    #[test]
    fn new_rejects_foreign_colors() {
        assert!(RainbowAssignment::new(2, vec![ColorSet::from_bits(4)]).is_err());
        assert!(RainbowAssignment::new(0, vec![]).is_err());
        assert!(RainbowAssignment::new(9, vec![]).is_err());
    }

    #[test]
    fn color_set_display() {
        assert_eq!(format!("{}", ColorSet::full(2)), "{1,2}");
        assert_eq!(format!("{}", ColorSet::EMPTY), "{}");
        assert_eq!(format!("{}", ColorSet::singleton(2)), "{2}");
    }
}
