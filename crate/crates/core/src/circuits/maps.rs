use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bijections::{self as bij, PlaneFunction};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::oracles::{enumerate_tableaux, partitions_up_to, EnumerationBounds};
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

use super::Value;

/// The maps that appear as nodes of the reduction graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapId {
    Phi,
    Psi,
    PhiLr,
    Zeta,
    ZetaN,
    ZetaLr,
    Xi,
    XiN,
    Chi,
    Rho1,
    Rho2,
    Varsigma,
    Burge,
    Theta,
}

impl MapId {
    pub const ALL: [MapId; 14] = [
        MapId::Phi,
        MapId::Psi,
        MapId::PhiLr,
        MapId::Zeta,
        MapId::ZetaN,
        MapId::ZetaLr,
        MapId::Xi,
        MapId::XiN,
        MapId::Chi,
        MapId::Rho1,
        MapId::Rho2,
        MapId::Varsigma,
        MapId::Burge,
        MapId::Theta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapId::Phi => "phi",
            MapId::Psi => "psi",
            MapId::PhiLr => "phiLR",
            MapId::Zeta => "zeta",
            MapId::ZetaN => "zetaN",
            MapId::ZetaLr => "zetaLR",
            MapId::Xi => "xi",
            MapId::XiN => "xiN",
            MapId::Chi => "chi",
            MapId::Rho1 => "rho1",
            MapId::Rho2 => "rho2",
            MapId::Varsigma => "varsigma",
            MapId::Burge => "burge",
            MapId::Theta => "theta",
        }
    }

    /// Reference implementation on circuit values.
    pub fn apply(self, v: &Value) -> Result<Value> {
        let pair = |r: (Tableau, Tableau)| Value::tableaux(r.0, r.1);
        match self {
            MapId::Phi => bij::rsk(v.as_matrix()?).map(pair),
            MapId::Burge => bij::burge(v.as_matrix()?).map(pair),
            MapId::Psi => bij::psi(v.as_tableau()?).map(Value::Tableau),
            MapId::Xi => bij::xi(v.as_tableau()?).map(Value::Tableau),
            MapId::XiN => bij::xi_normal(v.as_tableau()?).map(Value::Tableau),
            MapId::Chi => bij::chi(v.as_tableau()?).map(Value::Tableau),
            MapId::Rho1 => bij::rho1(v.as_tableau()?).map(Value::Tableau),
            MapId::Rho2 => bij::rho2(v.as_tableau()?).map(Value::Tableau),
            MapId::PhiLr => bij::phi_lr(v.as_tableau()?).map(pair),
            MapId::Zeta => {
                let (b, a) = v.as_tableau_pair()?;
                bij::zeta(b, a).map(pair)
            }
            MapId::ZetaN => {
                let (b, a) = v.as_tableau_pair()?;
                bij::zeta_normal(b, a).map(pair)
            }
            MapId::ZetaLr => {
                let (b, a) = v.as_tableau_pair()?;
                bij::zeta_lr(b, a).map(pair)
            }
            MapId::Varsigma => {
                let (a, b) = v.as_tableau_pair()?;
                bij::octahedral(a, b).map(pair)
            }
            MapId::Theta => bij::hillman_grassl(v.as_plane()?).map(Value::Plane),
        }
    }

    /// Every input in the map's domain within `bounds`.
    pub fn suite(self, bounds: &EnumerationBounds) -> Vec<Value> {
        match self {
            MapId::Phi | MapId::Burge => {
                let top = bounds.max_length.min(3);
                (0..=top).flat_map(|k| all_matrices(k, 2)).map(Value::Matrix).collect()
            }
            MapId::Psi | MapId::Xi | MapId::Chi | MapId::PhiLr => {
                bounds.tableaux().into_iter().map(Value::Tableau).collect()
            }
            MapId::XiN => bounds.tableaux().into_iter().filter(Tableau::is_normal).map(Value::Tableau).collect(),
            MapId::Rho1 | MapId::Rho2 => bounds.lr_tableaux().into_iter().map(Value::Tableau).collect(),
            MapId::Zeta => switch_pairs(bounds).collect(),
            MapId::ZetaN => switch_pairs(bounds)
                .filter(|v| v.as_tableau_pair().map(|(b, _)| b.is_normal()).unwrap_or(false))
                .collect(),
            MapId::ZetaLr => lr_pairs(bounds).into_iter().map(|(b, a)| Value::tableaux(b, a)).collect(),
            MapId::Varsigma => lr_pairs(bounds).into_iter().map(|(a, b)| Value::tableaux(a, b)).collect(),
            MapId::Theta => partitions_up_to(bounds.max_size.min(4), bounds.max_length)
                .into_iter()
                .filter(|p| !p.is_empty())
                .flat_map(|p| all_plane_functions(&p, 2))
                .map(Value::Plane)
                .collect(),
        }
    }
}

/// Every `k × k` matrix with entries in `0..=max`.
pub fn all_matrices(k: usize, max: i64) -> Vec<IntMatrix> {
    let n = k * k;
    let mut out = Vec::new();
    let mut digits = vec![0i64; n];
    loop {
        out.push(IntMatrix::from_fn(k, |i, j| digits[i * k + j]));
        let Some(p) = digits.iter().position(|&d| d < max) else { break };
        digits[p] += 1;
        digits[..p].iter_mut().for_each(|d| *d = 0);
    }
    out
}

/// Every function `[λ] -> {0..=max}`.
pub fn all_plane_functions(shape: &Partition, max: i64) -> Vec<PlaneFunction> {
    let n = shape.size() as usize;
    let mut out = Vec::new();
    let mut digits = vec![0i64; n];
    loop {
        let mut it = digits.iter().copied();
        let values = shape.parts().iter().map(|&m| (0..m).map(|_| it.next().unwrap_or(0)).collect()).collect();
        out.push(PlaneFunction { shape: shape.clone(), values });
        let Some(p) = digits.iter().position(|&d| d < max) else { break };
        digits[p] += 1;
        digits[..p].iter_mut().for_each(|d| *d = 0);
    }
    out
}

/// Pairs `(B, A)` obtained by cutting each suite tableau at every value.
fn switch_pairs(bounds: &EnumerationBounds) -> impl Iterator<Item = Value> {
    bounds.tableaux().into_iter().flat_map(|t| {
        (0..=t.range())
            .map(|r| {
                let (low, high) = t.split_at_value(r);
                let high = high.shift_values(-(r as i64)).expect("high part has entries > r");
                Value::tableaux(low, high)
            })
            .collect::<Vec<_>>()
    })
}

/// Stacked LR pairs: the first lies on `π/μ`, the second on `λ/π`.
pub fn lr_pairs(bounds: &EnumerationBounds) -> Vec<(Tableau, Tableau)> {
    let all = bounds.lr_tableaux();
    let mut by_inner: HashMap<Partition, Vec<&Tableau>> = HashMap::new();
    for t in &all {
        by_inner.entry(t.inner().clone()).or_default().push(t);
    }
    let mut out = Vec::new();
    for lower in &all {
        for upper in by_inner.get(lower.outer()).into_iter().flatten() {
            out.push((lower.clone(), (*upper).clone()));
        }
    }
    out
}

/// Normal-shape tableaux of every shape in the bounds.
pub fn normal_tableaux(bounds: &EnumerationBounds) -> Vec<Tableau> {
    partitions_up_to(bounds.max_size, bounds.max_length)
        .into_iter()
        .flat_map(|p| enumerate_tableaux(&SkewShape::normal(p), bounds.max_value))
        .collect()
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "rsk" => MapId::Phi,
            "jdt" => MapId::Psi,
            "phi_lr" => MapId::PhiLr,
            "zeta_normal" => MapId::ZetaN,
            "zeta_lr" => MapId::ZetaLr,
            "xi_normal" => MapId::XiN,
            "octahedral" => MapId::Varsigma,
            "hillman_grassl" => MapId::Theta,
            _ => return MapId::ALL.into_iter().find(|m| m.name() == s).ok_or(Error::MapMismatch(format!("unknown map {s}"))),
        };
        Ok(id)
    }
}

impl Serialize for MapId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
