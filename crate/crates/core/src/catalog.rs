//! Irreducible compact Hermitian symmetric spaces as rank/multiplicity triples.
//!
//! Every space is pinned by its rank `r` and root multiplicities `a`, `b`.
//! From these follow the complex dimension `n = r + r(r−1)a/2 + rb` and the
//! genus `p = (r−1)a + 2 + b`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Rank and multiplicities with the derived dimension and genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceParams {
    r: u32,
    a: u32,
    b: u32,
    n: u32,
    p: u32,
}

impl SpaceParams {
    pub fn new(r: i64, a: i64, b: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidParams(format!("rank must be >= 1, got {r}")));
        }
        if a < 0 || b < 0 {
            return Err(Error::InvalidParams(format!(
                "multiplicities must be non-negative, got a={a}, b={b}"
            )));
        }
        let n = r + r * (r - 1) * a / 2 + r * b;
        let p = (r - 1) * a + 2 + b;
        let fits =
            |v: i64| u32::try_from(v).map_err(|_| Error::InvalidParams(format!("{v} overflows")));
        Ok(SpaceParams {
            r: fits(r)?,
            a: fits(a)?,
            b: fits(b)?,
            n: fits(n)?,
            p: fits(p)?,
        })
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Complex dimension.
    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn genus(&self) -> u32 {
        self.p
    }

    /// `n/r`, an integer or half-integer.
    pub fn s(&self) -> BigRational {
        BigRational::new(BigInt::from(self.n), BigInt::from(self.r))
    }

    /// `p − n/r`, the base point of the Pochhammer symbols in the kernel coefficients.
    pub fn c0(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.p)) - self.s()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceLabel {
    /// Grassmannian of k-planes in C^(k+m).
    I(u32, u32),
    /// SO(2m)/U(m).
    II(u32),
    /// Sp(m)/U(m).
    III(u32),
    /// Quadric of dimension m.
    IV(u32),
    EIII,
    EVII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    I,
    II,
    III,
    IV,
    Exceptional,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" => Ok(Family::I),
            "II" => Ok(Family::II),
            "III" => Ok(Family::III),
            "IV" => Ok(Family::IV),
            "E" | "EXCEPTIONAL" | "EIII" | "EVII" => Ok(Family::Exceptional),
            other => Err(Error::BadLabel(format!("unknown family {other:?}"))),
        }
    }
}

impl SpaceLabel {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            SpaceLabel::I(k, m) => 1 <= k && k <= m,
            SpaceLabel::II(m) => m >= 5,
            SpaceLabel::III(m) => m >= 1,
            SpaceLabel::IV(m) => m >= 3,
            SpaceLabel::EIII | SpaceLabel::EVII => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadLabel(format!(
                "{self} is outside the family's range"
            )))
        }
    }

    pub fn family(&self) -> Family {
        match self {
            SpaceLabel::I(..) => Family::I,
            SpaceLabel::II(_) => Family::II,
            SpaceLabel::III(_) => Family::III,
            SpaceLabel::IV(_) => Family::IV,
            SpaceLabel::EIII | SpaceLabel::EVII => Family::Exceptional,
        }
    }

    /// Rank and multiplicities from the standard tables.
    pub fn triple(&self) -> Result<(i64, i64, i64)> {
        self.validate()?;
        Ok(match *self {
            // a is vacuous at rank one; 2 keeps I(1,m) in line with the rest of the family.
            SpaceLabel::I(k, m) => (k.min(m).into(), 2, i64::from(m.abs_diff(k))),
            SpaceLabel::II(m) => ((m / 2).into(), 4, if m % 2 == 0 { 0 } else { 2 }),
            SpaceLabel::III(m) => (m.into(), 1, 0),
            SpaceLabel::IV(m) => (2, i64::from(m) - 2, 0),
            SpaceLabel::EIII => (2, 6, 4),
            SpaceLabel::EVII => (3, 8, 0),
        })
    }

    pub fn params(&self) -> Result<SpaceParams> {
        let (r, a, b) = self.triple()?;
        SpaceParams::new(r, a, b)
    }

    /// Complex dimension as known for each family, independent of the root data.
    pub fn known_dim(&self) -> u64 {
        match *self {
            SpaceLabel::I(k, m) => u64::from(k) * u64::from(m),
            SpaceLabel::II(m) => u64::from(m) * (u64::from(m) - 1) / 2,
            SpaceLabel::III(m) => u64::from(m) * (u64::from(m) + 1) / 2,
            SpaceLabel::IV(m) => m.into(),
            SpaceLabel::EIII => 16,
            SpaceLabel::EVII => 27,
        }
    }

    /// `(k, m)` for type I labels, which the numeric lab can realize as matrices.
    pub fn type_i_shape(&self) -> Option<(usize, usize)> {
        match *self {
            SpaceLabel::I(k, m) => Some((k as usize, m as usize)),
            _ => None,
        }
    }
}

/// Short aliases used throughout the tests and reports.
impl SpaceLabel {
    pub const CP1: SpaceLabel = SpaceLabel::I(1, 1);
    pub const CP2: SpaceLabel = SpaceLabel::I(1, 2);
    pub const GR24: SpaceLabel = SpaceLabel::I(2, 2);
}

pub fn space_from_params(r: i64, a: i64, b: i64) -> Result<SpaceParams> {
    SpaceParams::new(r, a, b)
}

pub fn space_from_label(label: SpaceLabel) -> Result<SpaceParams> {
    label.params()
}

impl fmt::Display for SpaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceLabel::I(k, m) => write!(f, "I({k},{m})"),
            SpaceLabel::II(m) => write!(f, "II({m})"),
            SpaceLabel::III(m) => write!(f, "III({m})"),
            SpaceLabel::IV(m) => write!(f, "IV({m})"),
            SpaceLabel::EIII => f.write_str("EIII"),
            SpaceLabel::EVII => f.write_str("EVII"),
        }
    }
}

impl FromStr for SpaceLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_uppercase();
        let bad = || Error::BadLabel(s.to_string());
        match compact.as_str() {
            "EIII" => return Ok(SpaceLabel::EIII),
            "EVII" => return Ok(SpaceLabel::EVII),
            _ => {}
        }
        let open = compact.find('(').ok_or_else(bad)?;
        let body = compact[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let args = body
            .split(',')
            .map(|t| t.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let label = match (&compact[..open], args.as_slice()) {
            ("I", [k, m]) => SpaceLabel::I(*k, *m),
            ("II", [m]) => SpaceLabel::II(*m),
            ("III", [m]) => SpaceLabel::III(*m),
            ("IV", [m]) => SpaceLabel::IV(*m),
            _ => return Err(bad()),
        };
        label.validate()?;
        Ok(label)
    }
}

/// All catalog labels, with type I Grassmannians up to `C^max_l`.
///
/// Families II–IV are listed for `m` up to `max_l` (III up to `max_l − 2`);
/// the two exceptional spaces are always present.
pub fn catalog(max_l: u32, family: Option<Family>) -> Vec<SpaceLabel> {
    let mut out = Vec::new();
    let want = |f: Family| family.is_none_or(|x| x == f);
    if want(Family::I) {
        for l in 2..=max_l {
            for k in 1..=l / 2 {
                out.push(SpaceLabel::I(k, l - k));
            }
        }
        out.sort();
    }
    if want(Family::II) {
        out.extend((5..=max_l).map(SpaceLabel::II));
    }
    if want(Family::III) {
        out.extend((1..=max_l.saturating_sub(2)).map(SpaceLabel::III));
    }
    if want(Family::IV) {
        out.extend((3..=max_l).map(SpaceLabel::IV));
    }
    if want(Family::Exceptional) {
        out.push(SpaceLabel::EIII);
        out.push(SpaceLabel::EVII);
    }
    out
}
