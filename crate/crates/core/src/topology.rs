//! Cohomological obstructions: lens-space cohomology, Grassmannian Poincaré
//! polynomials (Gaussian binomials in `q = t²`) and the Betti-number condition
//! a circle bundle with the real cohomology of a lens space forces on its base.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Product `(1−q)(1−q²)…(1−q^j)`.
fn q_factorial(j: u32) -> IntPoly {
    (1..=j).fold(IntPoly::one(), |acc, i| {
        let mut c = alloc::vec![BigInt::zero(); i as usize + 1];
        c[0] = BigInt::one();
        c[i as usize] = -BigInt::one();
        &acc * &IntPoly::new(c)
    })
}

/// Gaussian binomial `[l choose k]_q`, by exact division of q-factorials.
pub fn gaussian_binomial(l: u32, k: u32) -> Result<IntPoly> {
    if k > l {
        return Err(Error::InvalidParams(format!(
            "need k <= l, got k={k}, l={l}"
        )));
    }
    let num = q_factorial(l);
    let den = &q_factorial(k) * &q_factorial(l - k);
    let (quot, rem) = num
        .div_rem(&den)
        .ok_or_else(|| Error::InexactDivision(format!("[{l} choose {k}]_q")))?;
    if rem.degree().is_some() {
        return Err(Error::InexactDivision(format!(
            "[{l} choose {k}]_q leaves remainder {rem}"
        )));
    }
    Ok(quot)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    Z,
    /// Cyclic group of order `m ≥ 2`.
    Zm(u64),
    Zero,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Z => f.write_str("Z"),
            Group::Zm(m) => write!(f, "Z_{m}"),
            Group::Zero => f.write_str("0"),
        }
    }
}

/// Integral cohomology by degree; degrees not present are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    top: u32,
    entries: BTreeMap<u32, Group>,
}

impl CohomologyTable {
    pub fn get(&self, degree: u32) -> Group {
        self.entries.get(&degree).copied().unwrap_or(Group::Zero)
    }

    /// Nonzero entries in increasing degree.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, Group)> + '_ {
        self.entries.iter().map(|(d, g)| (*d, *g))
    }

    /// Dimension of the underlying manifold.
    pub fn top_degree(&self) -> u32 {
        self.top
    }

    /// Betti numbers: rank of the free part in each degree `0..=top`.
    pub fn betti(&self) -> Vec<u32> {
        (0..=self.top)
            .map(|d| u32::from(self.get(d) == Group::Z))
            .collect()
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, g) in self.nonzero() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "H^{d}={g}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `H^j(S^{2n+1}/Z_m, Z)`: `Z` in degrees `0` and `2n+1`, `Z_m` in even degrees `2..=2n`.
pub fn lens_cohomology(n: u32, m: u64) -> Result<CohomologyTable> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParams(format!(
            "need n, m >= 1, got n={n}, m={m}"
        )));
    }
    let top = 2 * n + 1;
    let mut entries = BTreeMap::new();
    entries.insert(0, Group::Z);
    entries.insert(top, Group::Z);
    if m > 1 {
        for j in 1..=n {
            entries.insert(2 * j, Group::Zm(m));
        }
    }
    Ok(CohomologyTable { top, entries })
}

/// Consecutive even Betti numbers of the base agree: `b_{2j−2} = b_{2j}` for `j = 1..=n`.
pub fn hh_condition(poincare: &IntPoly, n: u32) -> Result<bool> {
    let deg = poincare.degree().unwrap_or(0);
    if deg != n as usize {
        return Err(Error::InvalidParams(format!(
            "Poincare polynomial has degree {deg}, expected {n}"
        )));
    }
    Ok((1..=n as usize).all(|j| poincare.coeff(j - 1) == poincare.coeff(j)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensVerdict {
    pub k: u32,
    pub l: u32,
    /// Complex dimension `k(l−k)` of the Grassmannian.
    pub n: u32,
    pub poincare: IntPoly,
    /// Whether the circle bundle could have the real cohomology of a lens space.
    pub lens_candidate: bool,
}

impl LensVerdict {
    /// Real dimension `2n+1` of the circle bundle.
    pub fn bundle_real_dim(&self) -> u32 {
        2 * self.n + 1
    }
}

/// Applies the Betti-number condition to the Grassmannian of `k`-planes in `C^l`.
pub fn lens_obstruction(k: u32, l: u32) -> Result<LensVerdict> {
    if k < 1 || k > l.saturating_sub(k) {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k <= l-k, got k={k}, l={l}"
        )));
    }
    let poincare = gaussian_binomial(l, k)?;
    let n = k * (l - k);
    let lens_candidate = hh_condition(&poincare, n)?;
    Ok(LensVerdict {
        k,
        l,
        n,
        poincare,
        lens_candidate,
    })
}

/// All `(k, l)` with `1 ≤ k ≤ l−k` and `l ≤ max_l`, in increasing `l` then `k`.
pub fn grassmannian_pairs(max_l: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=max_l).flat_map(|l| (1..=l / 2).map(move |k| (k, l)))
}
