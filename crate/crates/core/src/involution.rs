//! Toral elements of finite order and their centralizers.
//!
//! A toral element is `exp(2πi/d · Σ c_i h_i)` where the `h_i` are either the
//! simple coroots or the fundamental coweights. A root `α` is fixed by it iff
//! its pairing with `Σ c_i h_i` vanishes mod `d`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::subsys::Subsystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Coordinates over simple coroots: pairing `Σ c_i ⟨α, α_i∨⟩`.
    Coroot,
    /// Coordinates over fundamental coweights: pairing `Σ c_i n_i(α)`.
    Coweight,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Coroot => "coroot",
            Basis::Coweight => "coweight",
        })
    }
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "coroot" => Ok(Basis::Coroot),
            "coweight" => Ok(Basis::Coweight),
            other => Err(format!("unknown basis {other:?}: expected coroot or coweight")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ToralElement {
    coords: Vec<i64>,
    denom: u32,
    basis: Basis,
}

impl ToralElement {
    /// Reduces coordinates mod `denom`.
    pub fn new(coords: Vec<i64>, denom: u32, basis: Basis) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        let d = denom as i64;
        let coords = coords.into_iter().map(|c| c.rem_euclid(d)).collect();
        Ok(ToralElement {
            coords,
            denom,
            basis,
        })
    }

    pub fn identity(rank: usize, basis: Basis) -> Self {
        ToralElement {
            coords: vec![0; rank],
            denom: 1,
            basis,
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        if self.coords.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: self.coords.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ToralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]/{} ({})", c.join(","), self.denom, self.basis)
    }
}

/// Residue of the root pairing mod the denominator.
pub fn pairing(rs: &RootSystem, t: &ToralElement, a: &Root) -> u32 {
    let raw: i64 = match t.basis {
        Basis::Coweight => a
            .coeffs()
            .iter()
            .zip(&t.coords)
            .map(|(&n, &c)| n as i64 * c)
            .sum(),
        Basis::Coroot => (0..rs.rank())
            .map(|i| t.coords[i] * rs.simple_pairing(a, i) as i64)
            .sum(),
    };
    raw.rem_euclid(t.denom as i64) as u32
}

/// Re-expresses a coroot-basis element over fundamental coweights:
/// `c'_j = Σ_i A[j][i] c_i`. Coweight input is returned unchanged.
pub fn convert_to_coweight(rs: &RootSystem, t: &ToralElement) -> Result<ToralElement> {
    t.check_rank(rs)?;
    if t.basis == Basis::Coweight {
        return Ok(t.clone());
    }
    let a = rs.cartan();
    let coords = (0..rs.rank())
        .map(|j| (0..rs.rank()).map(|i| a[j][i] as i64 * t.coords[i]).sum())
        .collect();
    ToralElement::new(coords, t.denom, Basis::Coweight)
}

/// Roots fixed by `t`.
pub fn centralizer<'a>(rs: &'a RootSystem, t: &ToralElement) -> Result<Subsystem<'a>> {
    t.check_rank(rs)?;
    let pos: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|a| pairing(rs, t, a) == 0)
        .cloned()
        .collect();
    Subsystem::from_positive(rs, pos)
}
