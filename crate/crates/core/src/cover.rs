//! Minimal vertex covers and the ideal of vertex covers `I_c(G)`.
//!
//! Three independent routes produce `I_c(G)`:
//!
//! * subset enumeration of minimal covers ([`minimal_covers_bruteforce`]),
//! * lcm-intersection of the edge primes `(X_i, X_j)` and the loop ideals
//!   `(X_k)` ([`cover_ideal_by_intersection`]),
//! * the closed-form candidate construction for K′-type graphs
//!   ([`kprime_cover_ideal`]).
//!
//! They must agree on every input; the test suites hold them to it.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{KPrimeSpec, LoopGraph};
use crate::monomial::{Monomial, MonomialIdeal};

/// Largest vertex count accepted by the enumerating routes.
pub const BRUTE_FORCE_LIMIT: usize = 25;

/// A set of vertices (1-based).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cover(pub BTreeSet<usize>);

impl Cover {
    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Π_{i ∈ C} X_i`.
    pub fn to_monomial(&self, n: usize) -> Result<Monomial> {
        Monomial::from_indices(n, &self.0.iter().copied().collect::<Vec<_>>())
    }

    fn from_mask(mask: u32) -> Self {
        Cover((0..32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect())
    }
}

impl FromIterator<usize> for Cover {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Cover(iter.into_iter().collect())
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// How `I_c` was (or should be) computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverRoute {
    Bruteforce,
    Intersection,
    ClosedForm,
}

impl CoverRoute {
    pub fn name(self) -> &'static str {
        match self {
            CoverRoute::Bruteforce => "bruteforce",
            CoverRoute::Intersection => "intersection",
            CoverRoute::ClosedForm => "closed-form",
        }
    }
}

fn guard(n: usize) -> Result<()> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard {
            what: "vertex count",
            actual: n,
            limit: BRUTE_FORCE_LIMIT,
            hint: "use the closed-form route for K′-type graphs",
        });
    }
    Ok(())
}

/// Next integer with the same popcount (Gosper's hack).
fn next_combination(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Spreads the low bits of `compact` onto the positions listed in `slots`.
fn spread(compact: u32, slots: &[u32]) -> u32 {
    slots
        .iter()
        .enumerate()
        .filter(|(i, _)| compact & (1 << i) != 0)
        .fold(0, |acc, (_, &bit)| acc | bit)
}

/// All inclusion-minimal vertex sets that contain every looped vertex and
/// meet every edge, sorted by size and then lexicographically.
pub fn minimal_covers_bruteforce(g: &LoopGraph) -> Result<Vec<Cover>> {
    guard(g.n())?;
    let bit = |v: usize| 1u32 << (v - 1);
    let loop_mask = g.loops().iter().fold(0u32, |acc, &v| acc | bit(v));
    // Edges touching a looped vertex are covered by the loop itself.
    let open_edges: Vec<u32> = g
        .edges()
        .map(|(a, b)| bit(a) | bit(b))
        .filter(|e| e & loop_mask == 0)
        .collect();
    let free: Vec<u32> = (1..=g.n())
        .map(bit)
        .filter(|b| b & loop_mask == 0)
        .collect();

    let mut accepted: Vec<u32> = Vec::new();
    for size in 0..=free.len() {
        let mut compact: u32 = if size == 0 { 0 } else { (1u32 << size) - 1 };
        loop {
            let mask = loop_mask | spread(compact, &free);
            let covers = open_edges.iter().all(|e| e & mask != 0);
            if covers && !accepted.iter().any(|&c| c & !mask == 0) {
                accepted.push(mask);
            }
            if size == 0 {
                break;
            }
            compact = next_combination(compact);
            if compact >= 1u32 << free.len() {
                break;
            }
        }
    }

    let mut covers: Vec<Cover> = accepted.into_iter().map(Cover::from_mask).collect();
    covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.iter().cmp(b.0.iter())));
    Ok(covers)
}

/// Ideal generated by `Π_{i ∈ C} X_i` over the given covers.
pub fn cover_ideal_from_covers(covers: &[Cover], n: usize) -> Result<MonomialIdeal> {
    let gens = covers
        .iter()
        .map(|c| c.to_monomial(n))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

/// `(∩_{edges} (X_i, X_j)) ∩ (∩_{loops} (X_k))`.
pub fn cover_ideal_by_intersection(g: &LoopGraph) -> Result<MonomialIdeal> {
    guard(g.n())?;
    let n = g.n();
    let var = |i: usize| Monomial::variable(n, i);
    // The loop ideals are principal, so intersecting them first keeps the
    // intermediate generator sets small.
    let loop_part = g
        .loops()
        .iter()
        .map(|&k| var(k).map(MonomialIdeal::principal));
    let edge_part = g
        .edges()
        .map(|(a, b)| MonomialIdeal::new(n, [var(a)?, var(b)?]));
    let parts = loop_part.chain(edge_part).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(n, &parts)
}

/// Closed-form `I_c(K′)` without enumeration.
///
/// Any minimal cover holds every looped vertex and at least `m - 1` centers.
/// With all centers present nothing else is needed; omitting an unlooped
/// center `α_i` forces every other vertex of block `i`. The candidates are
/// therefore ALL-CENTERS and one OMIT-`i` per unlooped center; minimalizing
/// drops ALL-CENTERS whenever some OMIT-`i` is contained in it.
pub fn kprime_cover_ideal(spec: &KPrimeSpec) -> MonomialIdeal {
    let n = spec.n();
    let mono = |set: &BTreeSet<usize>| {
        Monomial::from_indices(n, &set.iter().copied().collect::<Vec<_>>())
            .expect("spec vertices lie in 1..=n")
    };
    let looped_leaves: BTreeSet<usize> = spec
        .loops()
        .iter()
        .copied()
        .filter(|&v| !spec.is_center(v))
        .collect();

    let mut candidates = Vec::with_capacity(spec.m() + 1);
    let all_centers: BTreeSet<usize> = spec
        .centers()
        .iter()
        .copied()
        .chain(looped_leaves.iter().copied())
        .collect();
    candidates.push(mono(&all_centers));

    for block in spec.blocks() {
        let center = *block.end();
        if spec.loops().contains(&center) {
            continue;
        }
        let omit: BTreeSet<usize> = spec
            .centers()
            .iter()
            .copied()
            .filter(|&c| c != center)
            .chain(block.clone().filter(|&v| v != center))
            .chain(looped_leaves.iter().copied().filter(|v| !block.contains(v)))
            .collect();
        candidates.push(mono(&omit));
    }
    MonomialIdeal::new(n, candidates).expect("candidates share n")
}

/// `I_c(K′_m)` for the complete graph on `1..=m` with the given loops:
/// `(X_1⋯X_m)` when every vertex is looped, otherwise one generator
/// `Π_{v ≠ u} X_v` per unlooped vertex `u`.
pub fn complete_cover_ideal(m: usize, loops: &BTreeSet<usize>) -> Result<MonomialIdeal> {
    let all: Vec<usize> = (1..=m).collect();
    if (1..=m).all(|v| loops.contains(&v)) {
        return Ok(MonomialIdeal::principal(Monomial::from_indices(m, &all)?));
    }
    let gens = (1..=m)
        .filter(|u| !loops.contains(u))
        .map(|u| {
            let rest: Vec<usize> = all.iter().copied().filter(|&v| v != u).collect();
            Monomial::from_indices(m, &rest)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(m, gens)
}

/// `I_c(star′_n(n))` for the star with center `n`: `(X_{t_1}⋯X_{t_s} X_n)`
/// when the center is looped, otherwise `(X_1⋯X_{n-1}, X_{t_1}⋯X_{t_s} X_n)`
/// minimalized (the second generator absorbs into the first when every leaf
/// is looped).
pub fn star_cover_ideal(n: usize, loops: &BTreeSet<usize>) -> Result<MonomialIdeal> {
    let looped_leaves: Vec<usize> = (1..n).filter(|v| loops.contains(v)).collect();
    let with_center: Vec<usize> = looped_leaves.iter().copied().chain([n]).collect();
    let center_side = Monomial::from_indices(n, &with_center)?;
    if loops.contains(&n) {
        return Ok(MonomialIdeal::principal(center_side));
    }
    let leaves: Vec<usize> = (1..n).collect();
    MonomialIdeal::new(n, [Monomial::from_indices(n, &leaves)?, center_side])
}

/// `I_c` of a K′ spec through the requested route.
pub fn kprime_cover_ideal_via(spec: &KPrimeSpec, route: CoverRoute) -> Result<MonomialIdeal> {
    match route {
        CoverRoute::ClosedForm => Ok(kprime_cover_ideal(spec)),
        other => graph_cover_ideal_via(&spec.expand(), other),
    }
}

/// `I_c` of an explicit graph through the requested route.
pub fn graph_cover_ideal_via(g: &LoopGraph, route: CoverRoute) -> Result<MonomialIdeal> {
    match route {
        CoverRoute::Bruteforce => cover_ideal_from_covers(&minimal_covers_bruteforce(g)?, g.n()),
        CoverRoute::Intersection => cover_ideal_by_intersection(g),
        CoverRoute::ClosedForm => Err(Error::Validation(
            "the closed-form route needs a K′ specification".into(),
        )),
    }
}

/// Minimum patrol placements: the covering number and every optimal cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatrolSolution {
    pub covering_number: usize,
    pub optimal_covers: Vec<Cover>,
    /// Set when there is nothing to cover (no edges, no loops); the covering
    /// number is then 0 and the only cover is empty.
    pub nothing_to_cover: bool,
}

#[derive(Debug, Clone, Copy)]
pub enum PatrolSource<'a> {
    Graph(&'a LoopGraph),
    KPrime(&'a KPrimeSpec),
    Ideal(&'a MonomialIdeal),
}

/// Picks the minimum-degree generators of the cover ideal.
pub fn min_patrols(source: PatrolSource<'_>) -> Result<PatrolSolution> {
    let ideal = match source {
        PatrolSource::Graph(g) => cover_ideal_by_intersection(g)?,
        PatrolSource::KPrime(spec) => kprime_cover_ideal(spec),
        PatrolSource::Ideal(i) => i.clone(),
    };
    let min = ideal.min_degree().ok_or(Error::ZeroIdeal)?;
    let mut optimal_covers: Vec<Cover> = ideal
        .gens()
        .iter()
        .filter(|g| g.degree() == min)
        .map(|g| g.support().into_iter().collect())
        .collect();
    optimal_covers.sort_by(|a, b| a.0.iter().cmp(b.0.iter()));
    Ok(PatrolSolution {
        covering_number: min as usize,
        optimal_covers,
        nothing_to_cover: min == 0,
    })
}
