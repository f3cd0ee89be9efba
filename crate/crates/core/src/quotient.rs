//! Linear quotients: orderings of `G(I)` whose prefix colon ideals are
//! generated by variables, the integer `q(I)`, and the graded shifts of the
//! iterated mapping-cone resolution they induce.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial, MonomialIdeal};

/// Largest generator count searched exhaustively by [`find_linear_order`].
pub const SEARCH_LIMIT: usize = 12;

/// An ordering of `G(I)` together with its colon steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "CertificateJson")]
pub struct QuotientCertificate {
    pub order: Vec<Monomial>,
    /// `steps[j - 2]` is `G((u_1, …, u_{j-1}) : u_j)` for `j = 2..=t`.
    pub steps: Vec<MonomialIdeal>,
    /// Largest step generator count; 0 when there are no steps.
    pub q: usize,
    /// Every step is generated by variables.
    pub linear: bool,
}

impl QuotientCertificate {
    /// Variable indices of each step; meaningful when `linear`.
    pub fn step_variables(&self) -> Vec<Vec<usize>> {
        self.steps
            .iter()
            .map(|s| s.gens().iter().flat_map(Monomial::support).collect())
            .collect()
    }
}

/// Wire form: the order as index lists, each step as a list of generators
/// (index lists), `q` and the linear flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub order: Vec<Vec<usize>>,
    pub steps: Vec<Vec<Vec<usize>>>,
    pub q: usize,
    pub linear: bool,
}

impl From<QuotientCertificate> for CertificateJson {
    fn from(c: QuotientCertificate) -> Self {
        CertificateJson {
            order: c.order.iter().map(Monomial::index_sequence).collect(),
            steps: c
                .steps
                .iter()
                .map(|s| s.gens().iter().map(Monomial::index_sequence).collect())
                .collect(),
            q: c.q,
            linear: c.linear,
        }
    }
}

/// Generators ordered by degree, ties broken by ascending lexicographic
/// order of exponent vectors (the leftmost nonzero entry of `u - v` is
/// negative when `u` comes first).
pub fn canonical_order(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if let Some(bad) = ideal.gens().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree(bad.to_string()));
    }
    let mut order = ideal.gens().to_vec();
    order.sort_by(Monomial::cmp_exponent_lex);
    Ok(order)
}

fn step_ideal(n: usize, prefix: &[Monomial], next: &Monomial) -> MonomialIdeal {
    minimalize(n, prefix.iter().map(|u| u.colon_unchecked(next)))
        .expect("prefix generators share n")
}

fn is_linear(step: &MonomialIdeal) -> bool {
    step.gens().iter().all(|g| g.degree() == 1)
}

/// Computes every prefix colon of `order`, which must be a permutation of
/// `G(I)`.
pub fn check_linear_quotients(
    ideal: &MonomialIdeal,
    order: &[Monomial],
) -> Result<QuotientCertificate> {
    let mut sorted = order.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != order.len() || sorted != ideal.gens() {
        return Err(Error::NotPermutation(format!(
            "{} listed, ideal has {} generators",
            order.len(),
            ideal.len()
        )));
    }
    let steps: Vec<MonomialIdeal> = (1..order.len())
        .map(|j| step_ideal(ideal.n(), &order[..j], &order[j]))
        .collect();
    Ok(QuotientCertificate {
        order: order.to_vec(),
        q: steps.iter().map(MonomialIdeal::len).max().unwrap_or(0),
        linear: steps.iter().all(is_linear),
        steps,
    })
}

/// Looks for an ordering with linear quotients: the canonical order first,
/// then a depth-first search over orderings.
///
/// Returns `Ok(None)` when no ordering exists, and
/// [`Error::Inconclusive`] when the canonical order fails and the ideal is
/// too large to search.
pub fn find_linear_order(ideal: &MonomialIdeal) -> Result<Option<QuotientCertificate>> {
    let mut ranked = ideal.gens().to_vec();
    if ideal.is_squarefree() {
        let cert = check_linear_quotients(ideal, &canonical_order(ideal)?)?;
        if cert.linear {
            return Ok(Some(cert));
        }
        ranked = cert.order;
    }
    if ranked.len() > SEARCH_LIMIT {
        return Err(Error::Inconclusive(format!(
            "canonical order fails and {} generators exceed the search limit of {SEARCH_LIMIT}",
            ranked.len()
        )));
    }

    // pair[k][j] = u_k / gcd(u_k, u_j), the contribution of u_k to the step
    // for u_j.
    let pair: Vec<Vec<Monomial>> = ranked
        .iter()
        .map(|u| ranked.iter().map(|v| u.colon_unchecked(v)).collect())
        .collect();
    let n = ideal.n();
    let step_is_linear = |used: &[usize], j: usize| -> bool {
        let step = minimalize(n, used.iter().map(|&k| pair[k][j].clone()))
            .expect("generators share n");
        is_linear(&step)
    };

    // Whether a prefix can be completed depends only on its set of
    // generators, so failed sets are remembered by bitmask.
    fn search(
        t: usize,
        prefix: &mut Vec<usize>,
        mask: u32,
        dead: &mut HashSet<u32>,
        ok: &dyn Fn(&[usize], usize) -> bool,
    ) -> bool {
        if prefix.len() == t {
            return true;
        }
        if dead.contains(&mask) {
            return false;
        }
        for j in 0..t {
            if mask & (1 << j) != 0 || !ok(prefix, j) {
                continue;
            }
            prefix.push(j);
            if search(t, prefix, mask | (1 << j), dead, ok) {
                return true;
            }
            prefix.pop();
        }
        dead.insert(mask);
        false
    }

    let mut prefix = Vec::with_capacity(ranked.len());
    let mut dead = HashSet::new();
    if search(ranked.len(), &mut prefix, 0, &mut dead, &step_is_linear) {
        let order: Vec<Monomial> = prefix.iter().map(|&k| ranked[k].clone()).collect();
        return check_linear_quotients(ideal, &order).map(Some);
    }
    Ok(None)
}

/// `q(I)` from any ordering with linear quotients.
pub fn q_of(ideal: &MonomialIdeal) -> Result<usize> {
    find_linear_order(ideal)?
        .map(|c| c.q)
        .ok_or(Error::NoLinearOrder)
}

/// Graded shifts of the resolution of `I` built from a linear-quotient
/// order: generator `u_j` of degree `d_j` with `r_j` step variables adds
/// `C(r_j, i)` copies of `d_j + i` in homological degree `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionShifts {
    /// `shifts[i]`, sorted ascending, for homological degrees `0..`.
    pub shifts: Vec<Vec<u32>>,
}

impl ResolutionShifts {
    /// Number of nonzero free modules in the resolution of `I`.
    pub fn length(&self) -> usize {
        self.shifts.len()
    }

    /// Rank of the free module in homological degree `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.shifts.get(i).map_or(0, Vec::len)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn resolution_shifts(cert: &QuotientCertificate) -> Result<ResolutionShifts> {
    if !cert.linear {
        return Err(Error::NonLinear);
    }
    let mut shifts: Vec<Vec<u32>> = Vec::new();
    for (j, u) in cert.order.iter().enumerate() {
        let r = if j == 0 { 0 } else { cert.steps[j - 1].len() };
        for i in 0..=r {
            if shifts.len() <= i {
                shifts.push(Vec::new());
            }
            let shift = u.degree() + i as u32;
            shifts[i].extend(std::iter::repeat_n(shift, binomial(r, i)));
        }
    }
    for s in &mut shifts {
        s.sort_unstable();
    }
    Ok(ResolutionShifts { shifts })
}
