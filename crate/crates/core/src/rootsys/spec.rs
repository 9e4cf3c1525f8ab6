//! Group labels: `A3`, `B4`, `D5`, `I2(7)`, `H3`, `F4`, `E6`, and products
//! such as `A2xA1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    /// Dihedral group of order `2m`.
    I2(usize),
    H3,
    F4,
    E6,
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::I2(_) => 2,
            CoxeterType::H3 => 3,
            CoxeterType::F4 => 4,
            CoxeterType::E6 => 6,
        }
    }

    pub fn label(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::E6 => write!(f, "E6"),
        }
    }
}

/// A (possibly reducible) group given as a list of irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub factors: Vec<CoxeterType>,
}

impl GroupSpec {
    pub fn irreducible(t: CoxeterType) -> Self {
        GroupSpec { factors: vec![t] }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse(text.to_string()));
        }
        let mut factors = Vec::new();
        for part in text.split(['x', 'X', '*']) {
            factors.extend(parse_factor(part.trim())?);
        }
        Ok(GroupSpec { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

fn parse_factor(s: &str) -> Result<Vec<CoxeterType>> {
    let bad = || Error::Parse(s.to_string());
    match s {
        "H3" => return Ok(vec![CoxeterType::H3]),
        "F4" => return Ok(vec![CoxeterType::F4]),
        "E6" => return Ok(vec![CoxeterType::E6]),
        "E7" | "E8" | "H4" => {
            return Err(Error::Unsupported(format!(
                "{s} is not supported (supported exceptional types: H3, F4, E6)"
            )))
        }
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("I2(") {
        let m: usize = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if m < 3 {
            return Err(Error::Unsupported(format!("I2({m}) needs m >= 3")));
        }
        return Ok(vec![CoxeterType::I2(m)]);
    }
    let mut chars = s.chars();
    let family = chars.next().ok_or_else(bad)?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: usize = digits.parse().map_err(|_| bad())?;
    match (family, n) {
        (_, 0) => Err(Error::Unsupported(format!("{s}: rank must be positive"))),
        ('A', n) => Ok(vec![CoxeterType::A(n)]),
        ('B', 1) => Ok(vec![CoxeterType::A(1)]),
        ('B', n) => Ok(vec![CoxeterType::B(n)]),
        ('D', 1) => Err(Error::Unsupported("D1 is not a Coxeter type".into())),
        ('D', 2) => Ok(vec![CoxeterType::A(1), CoxeterType::A(1)]),
        ('D', 3) => Ok(vec![CoxeterType::A(3)]),
        ('D', n) => Ok(vec![CoxeterType::D(n)]),
        ('E', _) | ('H', _) | ('F', _) => {
            Err(Error::Unsupported(format!("{s} is not supported (supported exceptional types: H3, F4, E6)")))
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CoxeterType::*;

    #[test]
    fn parses_labels() {
        assert_eq!(GroupSpec::parse("A3").unwrap().factors, vec![A(3)]);
        assert_eq!(GroupSpec::parse("I2(7)").unwrap().factors, vec![I2(7)]);
        let p = GroupSpec::parse("A2xA1").unwrap();
        assert_eq!(p.factors, vec![A(2), A(1)]);
        assert_eq!(p.rank(), 3);
        assert_eq!(GroupSpec::parse("I2(5)xB3").unwrap().rank(), 5);
    }

    #[test]
    fn aliases() {
        assert_eq!(GroupSpec::parse("B1").unwrap().factors, vec![A(1)]);
        assert_eq!(GroupSpec::parse("D3").unwrap().factors, vec![A(3)]);
        assert_eq!(GroupSpec::parse("D2").unwrap().factors, vec![A(1), A(1)]);
    }

    #[test]
    fn rejects() {
        for bad in ["", "Q3", "A", "Ax", "I2(2)", "I2(x)", "A0", "D1", "B-1"] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad}");
        }
        for unsupported in ["E7", "E8", "H4"] {
            match GroupSpec::parse(unsupported) {
                Err(Error::Unsupported(msg)) => assert!(msg.contains("not supported")),
                other => panic!("{unsupported}: {other:?}"),
            }
        }
    }

    #[test]
    fn display_roundtrip() {
        for s in ["A3", "I2(7)", "A2xA1", "E6", "B4xD4"] {
            assert_eq!(GroupSpec::parse(s).unwrap().to_string(), s);
        }
    }
}
