//! Graded invariants of `R/I` and Cohen-Macaulay verdicts.
//!
//! `pd` comes from `q + 1` on ideals with linear quotients (1 for principal
//! ideals), `depth = n - pd`, `dim = n - h(I)`, and
//! `reg = max generator degree - 1`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cover::BRUTE_FORCE_LIMIT;
use crate::error::{Error, Result};
use crate::graph::KPrimeSpec;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::quotient::find_linear_order;

/// Which formulas produced an [`InvariantReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvariantRoute {
    Principal,
    LinearQuotients,
    BoundsOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegInterval {
    pub lo: i64,
    pub hi: i64,
}

impl RegInterval {
    pub fn contains(&self, value: i64) -> bool {
        self.lo <= value && value <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub h: usize,
    pub q: Option<usize>,
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    pub dim: usize,
    pub reg: Option<i64>,
    pub reg_bounds: Option<RegInterval>,
    /// `None` when depth is not determined.
    pub cm: Option<bool>,
    pub route: InvariantRoute,
    /// The linear-quotient order used, as index lists.
    pub linear_order: Option<Vec<Vec<usize>>>,
}

/// `h(I)`: the fewest variables meeting every generator.
pub fn h_of(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.gens().iter().any(Monomial::is_unit) {
        return Err(Error::UnitIdeal);
    }
    let supports: Vec<Vec<usize>> = ideal.gens().iter().map(Monomial::support).collect();
    let common = (1..=ideal.n()).any(|v| supports.iter().all(|s| s.contains(&v)));
    if common {
        return Ok(1);
    }
    let vars: Vec<usize> = supports.iter().flatten().copied().sorted().dedup().collect();
    if vars.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard {
            what: "variables in the support",
            actual: vars.len(),
            limit: BRUTE_FORCE_LIMIT,
            hint: "no common variable to shortcut the hitting-set search",
        });
    }
    // Generators as bitmasks over the compacted variable list.
    let masks: Vec<u32> = supports
        .iter()
        .map(|s| {
            s.iter()
                .map(|v| 1u32 << vars.binary_search(v).unwrap())
                .fold(0, |a, b| a | b)
        })
        .collect();
    let h = (2..=vars.len())
        .find(|&k| {
            (0..vars.len()).combinations(k).any(|pick| {
                let chosen = pick.iter().fold(0u32, |a, &b| a | (1 << b));
                masks.iter().all(|m| m & chosen != 0)
            })
        })
        .expect("the full support meets every generator");
    Ok(h)
}

/// `[(m - 1) + (σ - 2), n - 2]` for a K′ spec with `σ` the largest block.
pub fn reg_bounds_kprime(spec: &KPrimeSpec) -> RegInterval {
    let m = spec.m() as i64;
    let sigma = spec.max_block_size() as i64;
    RegInterval {
        lo: (m - 1) + (sigma - 2),
        hi: spec.n() as i64 - 2,
    }
}

/// Full report; `context` supplies `m` and `σ` for the K′ regularity bounds.
pub fn invariants(ideal: &MonomialIdeal, context: Option<&KPrimeSpec>) -> Result<InvariantReport> {
    let h = h_of(ideal)?;
    let n = ideal.n();
    let dim = n - h;
    let max_reg = ideal.max_degree().expect("nonzero ideal") as i64 - 1;

    if ideal.is_principal() {
        let pd = 1;
        let depth = n - pd;
        return Ok(InvariantReport {
            n,
            h,
            q: Some(0),
            pd: Some(pd),
            depth: Some(depth),
            dim,
            reg: Some(max_reg),
            reg_bounds: Some(RegInterval {
                lo: max_reg,
                hi: n as i64 - 1,
            }),
            cm: Some(depth == dim),
            route: InvariantRoute::Principal,
            linear_order: Some(vec![ideal.gens()[0].index_sequence()]),
        });
    }

    let context_bounds = context.map(reg_bounds_kprime);
    // An oversized ideal whose canonical order fails is reported with bounds
    // only, like one without linear quotients.
    let cert = match find_linear_order(ideal) {
        Ok(c) => c,
        Err(Error::Inconclusive(_)) => None,
        Err(e) => return Err(e),
    };
    match cert {
        Some(cert) => {
            let pd = cert.q + 1;
            let depth = n.saturating_sub(pd);
            Ok(InvariantReport {
                n,
                h,
                q: Some(cert.q),
                pd: Some(pd),
                depth: Some(depth),
                dim,
                reg: Some(max_reg),
                reg_bounds: context_bounds,
                cm: Some(depth == dim),
                route: InvariantRoute::LinearQuotients,
                linear_order: Some(cert.order.iter().map(Monomial::index_sequence).collect()),
            })
        }
        None => Ok(InvariantReport {
            n,
            h,
            q: None,
            pd: None,
            depth: None,
            dim,
            reg: None,
            reg_bounds: context_bounds,
            cm: None,
            route: InvariantRoute::BoundsOnly,
            linear_order: None,
        }),
    }
}

pub fn is_cohen_macaulay(ideal: &MonomialIdeal) -> Result<bool> {
    invariants(ideal, None)?.cm.ok_or_else(|| {
        Error::Inconclusive("no linear quotients, so depth is not determined".into())
    })
}

/// Whether the loop set swallows the support of some generator of the
/// loopless cover ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmSaturationVerdict {
    pub satisfied: bool,
    /// Index list of the first (canonical order) generator contained in the
    /// loop set.
    pub witness: Option<Vec<usize>>,
}

pub fn cm_by_loop_saturation(
    base_cover_ideal: &MonomialIdeal,
    loops: &std::collections::BTreeSet<usize>,
) -> CmSaturationVerdict {
    let witness = base_cover_ideal
        .gens()
        .iter()
        .find(|g| g.support().iter().all(|v| loops.contains(v)))
        .map(Monomial::support);
    CmSaturationVerdict {
        satisfied: witness.is_some(),
        witness,
    }
}
