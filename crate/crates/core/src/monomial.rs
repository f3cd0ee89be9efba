//! Monomials over `n` variables and monomial ideals kept in minimal form.
//!
//! Variables are addressed with 1-based indices everywhere in the public
//! surface (`X1 .. Xn`); exponent vectors are stored 0-based internally.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `X1^e1 * ... * Xn^en` with nonnegative exponents.
///
/// The unit monomial (all exponents zero) is a valid value; there is no zero
/// monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn from_exponents(exps: Vec<u16>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::Validation(
                "a monomial needs at least one variable".into(),
            ));
        }
        Ok(Monomial { exps })
    }

    pub fn unit(n: usize) -> Self {
        assert!(n > 0, "ambient variable count must be positive");
        Monomial { exps: vec![0; n] }
    }

    /// The single variable `X_index` (1-based).
    pub fn variable(n: usize, index: usize) -> Result<Self> {
        Self::from_indices(n, &[index])
    }

    /// Builds a monomial from a list of 1-based variable indices; repeated
    /// indices raise the exponent.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation(
                "ambient variable count must be positive".into(),
            ));
        }
        let mut exps = vec![0u16; n];
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::Validation(format!(
                    "variable index {i} outside 1..={n}"
                )));
            }
            exps[i - 1] += 1;
        }
        Ok(Monomial { exps })
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    /// Exponent of `X_index` (1-based).
    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Sorted 1-based indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Sorted 1-based variable indices, each repeated by its exponent.
    pub fn index_sequence(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize))
            .collect()
    }

    fn check_same_n(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_n(other)?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_n(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_n(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    /// `self / gcd(self, f)`: the generator contributed by `self` to a colon
    /// ideal `(.., self, ..) : f`.
    pub fn colon_by(&self, f: &Monomial) -> Result<Monomial> {
        self.check_same_n(f)?;
        Ok(self.colon_unchecked(f))
    }

    pub(crate) fn colon_unchecked(&self, f: &Monomial) -> Monomial {
        self.zip_with(f, |a, b| a.saturating_sub(b))
    }

    fn zip_with(&self, other: &Monomial, op: impl Fn(u16, u16) -> u16) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    /// Compact notation without separators, e.g. `X3X5X12`.
    pub fn compact(&self) -> String {
        self.render("")
    }

    fn render(&self, sep: &str) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("X{}", i + 1),
                _ => format!("X{}^{}", i + 1, e),
            })
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses `X3*X5^2*X12`, the compact `X3X5^2X12`, or `1`.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            if n == 0 {
                return Err(Error::Parse("ambient variable count must be positive".into()));
            }
            return Ok(Monomial::unit(n));
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut indices = Vec::new();
        let read_number = |pos: &mut usize| -> Result<usize> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            s[start..*pos]
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a number at offset {start} in {s:?}")))
        };
        while pos < bytes.len() {
            match bytes[pos] {
                b'*' | b' ' => pos += 1,
                b'X' | b'x' => {
                    pos += 1;
                    let index = read_number(&mut pos)?;
                    let mut power = 1;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        power = read_number(&mut pos)?;
                    }
                    indices.extend(std::iter::repeat_n(index, power));
                }
                c => {
                    return Err(Error::Parse(format!(
                        "unexpected character {:?} in monomial {s:?}",
                        c as char
                    )))
                }
            }
        }
        if indices.is_empty() {
            return Err(Error::Parse(format!("empty monomial {s:?}")));
        }
        Monomial::from_indices(n, &indices).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Degree ascending, then ascending lexicographic order of exponent
    /// vectors: `u` precedes `v` when the leftmost nonzero entry of `u - v`
    /// is negative.
    pub fn cmp_exponent_lex(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("*"))
    }
}

/// Canonical order: degree ascending, then ascending lexicographic order of
/// the sorted index sequences (so `X1*X2 < X1*X3 < X2*X3`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.degree().cmp(&other.degree()))
            // At equal degree, a smaller index sequence means a larger
            // exponent vector.
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal stored as its unique minimal generating set, sorted in
/// canonical order. An empty generator list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Keeps exactly the divisibility-minimal elements of `ms`.
pub fn minimalize(n: usize, ms: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut sorted: Vec<Monomial> = ms.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(bad) = sorted.iter().find(|m| m.n() != n) {
        return Err(Error::DimensionMismatch {
            left: n,
            right: bad.n(),
        });
    }
    // Canonical order is degree-first, so every divisor of a candidate has
    // already been seen by the time the candidate is examined.
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted.drain(..) {
        if !kept.iter().any(|k| k.divides_unchecked(&m)) {
            kept.push(m);
        }
    }
    Ok(MonomialIdeal { n, gens: kept })
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation(
                "ambient variable count must be positive".into(),
            ));
        }
        minimalize(n, gens)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::unit(n)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            n: m.n(),
            gens: vec![m],
        }
    }

    /// Ideal generated by squarefree monomials given as 1-based index lists.
    pub fn from_index_lists<I, L>(n: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: AsRef<[usize]>,
    {
        let gens = lists
            .into_iter()
            .map(|l| Monomial::from_indices(n, l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: m.n(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    fn check_same_n(&self, other: usize) -> Result<()> {
        if self.n != other {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other,
            });
        }
        Ok(())
    }

    /// `G(I ∩ J)` as the minimal elements of the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other.n)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|u| other.gens.iter().map(move |v| u.lcm_unchecked(v)));
        minimalize(self.n, lcms)
    }

    /// Intersection of a sequence of ideals, minimalizing after every step.
    /// The empty intersection is the unit ideal.
    pub fn intersect_all<'a>(
        n: usize,
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        ideals
            .into_iter()
            .try_fold(MonomialIdeal::unit(n), |acc, next| acc.intersect(next))
    }

    /// The colon ideal `I : f`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_same_n(f.n())?;
        minimalize(self.n, self.gens.iter().map(|u| u.colon_unchecked(f)))
    }

    /// Generators in compact notation, e.g. `(X1X2, X3)`.
    pub fn compact(&self) -> String {
        self.render(Monomial::compact)
    }

    fn render(&self, f: impl Fn(&Monomial) -> String) -> String {
        if self.gens.is_empty() {
            return "(0)".into();
        }
        format!("({})", self.gens.iter().map(f).collect::<Vec<_>>().join(", "))
    }

    /// Parses `(X1*X2, X3)` or `(0)`.
    pub fn parse(s: &str, n: usize) -> Result<MonomialIdeal> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("ideal must be parenthesized: {s:?}")))?
            .trim();
        if inner == "0" {
            return Ok(MonomialIdeal::zero(n));
        }
        let gens = inner
            .split(',')
            .map(|t| Monomial::parse(t, n))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(n, gens)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson::from(self.clone())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|m| m.to_string()))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Wire form of an ideal: `{"n": 33, "gens": [[2,3,4], ...]}`. Each generator
/// lists its variable indices; a repeated index raises the exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<usize>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(value: IdealJson) -> Result<Self> {
        MonomialIdeal::from_index_lists(value.n, &value.gens)
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealJson {
            n: ideal.n,
            gens: ideal.gens.iter().map(Monomial::index_sequence).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(n: usize, idx: &[usize]) -> Monomial {
        Monomial::from_indices(n, idx).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_index_lists(n, gens).unwrap()
    }

    #[test]
    fn divides_examples() {
        assert!(m(3, &[1]).divides(&m(3, &[1, 2])).unwrap());
        assert!(!m(3, &[1, 1]).divides(&m(3, &[1])).unwrap());
        assert!(Monomial::unit(3).divides(&m(3, &[2, 3, 3])).unwrap());
        assert!(matches!(
            m(2, &[1]).divides(&m(3, &[1])),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn minimalize_examples() {
        let i = minimalize(3, [m(3, &[1, 2]), m(3, &[1, 2, 3])]).unwrap();
        assert_eq!(i.gens(), &[m(3, &[1, 2])]);
        let tri = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(tri.len(), 3);
        assert_eq!(minimalize(3, tri.gens().to_vec()).unwrap(), tri);
    }

    // Brute force: the squarefree monomials meeting each of (X1,X2), (X1,X3),
    // (X2,X3) are exactly the subsets of {1,2,3} of size >= 2; their minimal
    // elements are the three pairs.
    #[test]
    fn minimalize_of_triple_intersection_matches_subset_enumeration() {
        let primes = [[1, 2], [1, 3], [2, 3]];
        let mut covering = Vec::new();
        for mask in 0u32..8 {
            let set: Vec<usize> = (1..=3).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            if primes.iter().all(|p| p.iter().any(|v| set.contains(v))) {
                covering.push(m(3, &set));
            }
        }
        let expected = minimalize(3, covering).unwrap();
        assert_eq!(expected, ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]));

        let lcm_route = MonomialIdeal::intersect_all(
            3,
            &primes.map(|p| ideal(3, &[&[p[0]], &[p[1]]])),
        )
        .unwrap();
        assert_eq!(lcm_route, expected);
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            ideal(2, &[&[1]]).intersect(&ideal(2, &[&[2]])).unwrap(),
            ideal(2, &[&[1, 2]])
        );
        assert_eq!(
            ideal(3, &[&[1], &[2]]).intersect(&ideal(3, &[&[1], &[3]])).unwrap(),
            ideal(3, &[&[1], &[2, 3]])
        );
        let i = ideal(4, &[&[1, 2], &[3, 3]]);
        assert_eq!(i.intersect(&i).unwrap(), i);
    }

    // Degree <= 2 enumeration in 3 variables confirms (X1,X2) ∩ (X1,X3) = (X1, X2X3).
    #[test]
    fn intersect_matches_bounded_degree_membership() {
        let a = ideal(3, &[&[1], &[2]]);
        let b = ideal(3, &[&[1], &[3]]);
        let expected = ideal(3, &[&[1], &[2, 3]]);
        for mono in all_monomials(3, 2) {
            let both = a.contains(&mono).unwrap() && b.contains(&mono).unwrap();
            assert_eq!(both, expected.contains(&mono).unwrap(), "{mono}");
        }
    }

    #[test]
    fn colon_examples_from_degree_order_steps() {
        let n = 12;
        let f = ideal(n, &[&[3, 5, 6, 8, 12]]);
        assert_eq!(
            f.colon(&m(n, &[3, 4, 5, 8, 9, 12])).unwrap(),
            ideal(n, &[&[6]])
        );
        let g = ideal(n, &[&[3, 5, 6, 8, 12], &[3, 4, 5, 8, 9, 12]]);
        assert_eq!(
            g.colon(&m(n, &[1, 2, 5, 6, 8, 9, 12])).unwrap(),
            ideal(n, &[&[3]])
        );
        assert_eq!(g.colon(&Monomial::unit(n)).unwrap(), g);
    }

    #[test]
    fn canonical_order_sorts_by_degree_then_index_sequence() {
        let i = ideal(4, &[&[2, 3], &[1, 3], &[4], &[1, 2]]);
        let text: Vec<String> = i.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(text, ["X4", "X1*X2", "X1*X3", "X2*X3"]);
    }

    #[test]
    fn text_forms() {
        let mono = Monomial::from_indices(12, &[12, 3, 5, 5]).unwrap();
        assert_eq!(mono.to_string(), "X3*X5^2*X12");
        assert_eq!(mono.compact(), "X3X5^2X12");
        assert_eq!(Monomial::parse("X3*X5^2*X12", 12).unwrap(), mono);
        assert_eq!(Monomial::parse("X3X5^2X12", 12).unwrap(), mono);
        assert_eq!(Monomial::unit(2).to_string(), "1");
        assert!(Monomial::parse("X13", 12).is_err());
        assert!(Monomial::parse("Y1", 12).is_err());

        let i = ideal(3, &[&[1, 2], &[3]]);
        assert_eq!(i.to_string(), "(X3, X1*X2)");
        assert_eq!(MonomialIdeal::parse("(X3, X1*X2)", 3).unwrap(), i);
        assert_eq!(MonomialIdeal::zero(3).to_string(), "(0)");
        assert_eq!(MonomialIdeal::parse("(0)", 3).unwrap(), MonomialIdeal::zero(3));
    }

    #[test]
    fn json_form() {
        let i = ideal(4, &[&[1, 2], &[3, 3]]);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"n":4,"gens":[[1,2],[3,3]]}"#);
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, i);
        assert!(serde_json::from_str::<MonomialIdeal>(r#"{"n":2,"gens":[[3]]}"#).is_err());
    }

    fn all_monomials(n: usize, max_deg: usize) -> Vec<Monomial> {
        let mut out = vec![Monomial::unit(n)];
        let mut frontier = out.clone();
        for _ in 0..max_deg {
            let mut next = BTreeSet::new();
            for f in &frontier {
                for i in 1..=n {
                    next.insert(f.mul(&Monomial::variable(n, i).unwrap()).unwrap());
                }
            }
            frontier = next.into_iter().collect();
            out.extend(frontier.iter().cloned());
        }
        out
    }

    fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..3, n).prop_map(|e| Monomial::from_exponents(e).unwrap())
    }

    fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(arb_monomial(n), 0..5)
            .prop_map(move |gs| MonomialIdeal::new(n, gs).unwrap())
    }

    proptest! {
        #[test]
        fn minimalize_is_idempotent_and_order_insensitive(
            mut ms in proptest::collection::vec(arb_monomial(4), 0..8)
        ) {
            let a = minimalize(4, ms.clone()).unwrap();
            ms.reverse();
            let b = minimalize(4, ms).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(minimalize(4, a.gens().to_vec()).unwrap(), a.clone());
            for (i, u) in a.gens().iter().enumerate() {
                for (j, v) in a.gens().iter().enumerate() {
                    prop_assert!(i == j || !u.divides(v).unwrap());
                }
            }
        }

        #[test]
        fn gcd_and_lcm_bracket(u in arb_monomial(5), v in arb_monomial(5)) {
            let g = u.gcd(&v).unwrap();
            let l = u.lcm(&v).unwrap();
            prop_assert!(g.divides(&u).unwrap() && g.divides(&v).unwrap());
            prop_assert!(u.divides(&l).unwrap() && v.divides(&l).unwrap());
        }

        #[test]
        fn intersection_membership_matches_enumeration(
            (n, i, j) in (1usize..=6).prop_flat_map(|n| (Just(n), arb_ideal(n), arb_ideal(n)))
        ) {
            let both = i.intersect(&j).unwrap();
            prop_assert_eq!(&both, &j.intersect(&i).unwrap());
            for mono in all_monomials(n, 4) {
                prop_assert_eq!(
                    both.contains(&mono).unwrap(),
                    i.contains(&mono).unwrap() && j.contains(&mono).unwrap()
                );
            }
        }

        #[test]
        fn intersection_is_associative(a in arb_ideal(4), b in arb_ideal(4), c in arb_ideal(4)) {
            let left = a.intersect(&b).unwrap().intersect(&c).unwrap();
            let right = a.intersect(&b.intersect(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn colon_membership_matches_enumeration(i in arb_ideal(4), f in arb_monomial(4)) {
            let q = i.colon(&f).unwrap();
            for g in all_monomials(4, 3) {
                prop_assert_eq!(
                    q.contains(&g).unwrap(),
                    i.contains(&g.mul(&f).unwrap()).unwrap()
                );
            }
        }

        #[test]
        fn text_form_round_trips(i in arb_ideal(5)) {
            prop_assert_eq!(MonomialIdeal::parse(&i.to_string(), 5).unwrap(), i.clone());
            prop_assert_eq!(MonomialIdeal::parse(&i.compact(), 5).unwrap(), i);
        }
    }
}
