//! Order bounds for (mixed) cages.
//!
//! `moore_bound(r, g)` is the classical Moore bound `n0[r, g]` for undirected
//! `r`-regular graphs of girth `g`. `ahm_bound(r, g)` counts the vertices of
//! the mixed tree `T_{r,g}` and bounds `n[1, r; g]` from below.
//! `mixed_lower_bound` adds a minimal `z`-regular digraph of girth `g` on top
//! and bounds `n[z, r; g]`.

use std::fmt;

use thiserror::Error;

use crate::generators::FamilyParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("bound needs {0}")]
    Domain(String),
    #[error("bound overflows 64 bits")]
    Overflow,
    #[error("parameters [{z},{r};{g}] do not match the family for q = {q} ([{fz},{q};6])")]
    FamilyMismatch { z: u64, r: u64, g: u64, q: u32, fz: u32 },
    #[error("q = {0} must be a prime >= 3")]
    BadFamilyOrder(u32),
}

type Result<T> = std::result::Result<T, BoundsError>;

fn geometric(ratio: u64, terms: u64) -> Result<u64> {
    let mut sum = 0u64;
    let mut power = 1u64;
    for i in 0..terms {
        sum = sum.checked_add(power).ok_or(BoundsError::Overflow)?;
        if i + 1 < terms {
            power = power.checked_mul(ratio).ok_or(BoundsError::Overflow)?;
        }
    }
    Ok(sum)
}

/// `n0[r, g]`: `2 * sum_{i<k} (r-1)^i` for `g = 2k`, and
/// `1 + r * sum_{i<k} (r-1)^i` for `g = 2k + 1`.
pub fn moore_bound(r: u64, g: u64) -> Result<u64> {
    if r < 2 || g < 3 {
        return Err(BoundsError::Domain(format!("r >= 2 and g >= 3 (got r={r}, g={g})")));
    }
    let k = g / 2;
    let sum = geometric(r - 1, k)?;
    if g % 2 == 0 {
        sum.checked_mul(2).ok_or(BoundsError::Overflow)
    } else {
        r.checked_mul(sum).and_then(|v| v.checked_add(1)).ok_or(BoundsError::Overflow)
    }
}

/// `n_AHM[1, r; g] = 2 (1 + sum_{i=1}^{k-1} n0[r, 2i+1])`, plus `n0[r, g]`
/// when `g = 2k + 1` is odd.
pub fn ahm_bound(r: u64, g: u64) -> Result<u64> {
    if r < 2 || g < 4 {
        return Err(BoundsError::Domain(format!("r >= 2 and g >= 4 (got r={r}, g={g})")));
    }
    let k = g / 2;
    let mut inner = 1u64;
    for i in 1..k {
        inner = inner.checked_add(moore_bound(r, 2 * i + 1)?).ok_or(BoundsError::Overflow)?;
    }
    let mut total = inner.checked_mul(2).ok_or(BoundsError::Overflow)?;
    if g % 2 == 1 {
        total = total.checked_add(moore_bound(r, g)?).ok_or(BoundsError::Overflow)?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixedLowerBound {
    pub value: u64,
    /// Set when the bound relies on `n[z, g] = z(g-1) + 1`, which is only
    /// established for `z <= 4`.
    pub assumes_conjecture: bool,
}

/// `z(g-1) + 1 + n_AHM[1, r; g] - g`.
pub fn mixed_lower_bound(z: u64, r: u64, g: u64) -> Result<MixedLowerBound> {
    if z < 1 {
        return Err(BoundsError::Domain(format!("z >= 1 (got z={z})")));
    }
    let ahm = ahm_bound(r, g)?;
    let digraph = z.checked_mul(g - 1).and_then(|v| v.checked_add(1)).ok_or(BoundsError::Overflow)?;
    let value = digraph.checked_add(ahm).ok_or(BoundsError::Overflow)? - g;
    Ok(MixedLowerBound { value, assumes_conjecture: z >= 5 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub z: u64,
    pub r: u64,
    pub g: u64,
    pub moore: u64,
    pub ahm: u64,
    pub mixed_lower: u64,
    pub assumes_conjecture: bool,
    /// `4 q^2` when a family member with these parameters was requested.
    pub family_upper: Option<u64>,
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "params [{},{};{}]", self.z, self.r, self.g)?;
        writeln!(f, "moore {}", self.moore)?;
        writeln!(f, "ahm {}", self.ahm)?;
        writeln!(f, "mixed_lower {}", self.mixed_lower)?;
        writeln!(f, "assumes_conjecture {}", self.assumes_conjecture)?;
        match self.family_upper {
            Some(v) => writeln!(f, "family_upper {v}"),
            None => writeln!(f, "family_upper none"),
        }
    }
}

pub fn bounds_report(z: u64, r: u64, g: u64, q: Option<u32>) -> Result<BoundsReport> {
    let family_upper = match q {
        None => None,
        Some(q) => {
            let params = FamilyParams::new(q).map_err(|_| BoundsError::BadFamilyOrder(q))?;
            if u64::from(params.z) != z || u64::from(params.r) != r || g != 6 {
                return Err(BoundsError::FamilyMismatch { z, r, g, q, fz: params.z });
            }
            Some(params.order())
        }
    };
    let lower = mixed_lower_bound(z, r, g)?;
    Ok(BoundsReport {
        z,
        r,
        g,
        moore: moore_bound(r, g)?,
        ahm: ahm_bound(r, g)?,
        mixed_lower: lower.value,
        assumes_conjecture: lower.assumes_conjecture,
        family_upper,
    })
}
