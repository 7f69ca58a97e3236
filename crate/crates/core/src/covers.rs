//! Covers, additive covers, compactness and the optimizing cover solvers.
//!
//! Over a finite carrier and the chain Ł_n a family contains an additive
//! cover exactly when the supports of its members cover every point: `n`
//! copies of any set saturate to its crisp support. The analytic
//! compactness decision rests on this; the oracle mode re-derives it by
//! brute force.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::chain::BinOp;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyFamily, FuzzySet};
use crate::product::ProductSpace;
use crate::topology::{Settings, Topology};

/// A multiset of fuzzy sets whose truncated sum is 𝟏.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverCertificate {
    entries: Vec<(FuzzySet, u32)>,
}

impl CoverCertificate {
    /// Builds a certificate, merging repeated sets; fails unless the entries
    /// really sum to 𝟏.
    pub fn new(entries: Vec<(FuzzySet, u32)>) -> Result<Self> {
        let cert = Self::from_entries(entries)?;
        if !is_additive_cover(&cert) {
            return Err(Error::invalid("entries do not sum to 𝟏"));
        }
        Ok(cert)
    }

    /// Builds without checking the sum.
    pub fn from_entries(mut entries: Vec<(FuzzySet, u32)>) -> Result<Self> {
        let Some((first, _)) = entries.first() else {
            return Err(Error::invalid("empty certificate"));
        };
        let (chain, width) = (first.chain(), first.width());
        if entries.iter().any(|(s, _)| s.chain() != chain || s.width() != width) {
            return Err(Error::mismatch("certificate entries live on different shapes"));
        }
        if entries.iter().any(|&(_, m)| m == 0) {
            return Err(Error::invalid("multiplicities must be at least 1"));
        }
        entries.sort();
        let mut merged: Vec<(FuzzySet, u32)> = Vec::with_capacity(entries.len());
        for (s, m) in entries {
            match merged.last_mut() {
                Some((last, lm)) if *last == s => *lm += m,
                _ => merged.push((s, m)),
            }
        }
        Ok(CoverCertificate { entries: merged })
    }

    pub(crate) fn from_validated(entries: Vec<(FuzzySet, u32)>) -> Self {
        let cert = Self::from_entries(entries).expect("well-formed certificate");
        debug_assert!(is_additive_cover(&cert));
        cert
    }

    /// Entries in canonical order of their sets.
    pub fn entries(&self) -> &[(FuzzySet, u32)] {
        &self.entries
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m as u64).sum()
    }

    /// `m_1·α_1 ⊕ ... ⊕ m_k·α_k`.
    pub fn sum(&self) -> FuzzySet {
        let first = &self.entries[0].0;
        let chain = first.chain();
        let mut acc = FuzzySet::zero(chain, first.width());
        for (s, m) in &self.entries {
            acc = acc.combine_unchecked(BinOp::Oplus, &s.scale(*m));
        }
        acc
    }
}

impl fmt::Display for CoverCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (s, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}×{s}")?;
        }
        f.write_str("}")
    }
}

/// `⋁Γ = 𝟏`.
pub fn is_cover(family: &FuzzyFamily) -> bool {
    family.join().is_one()
}

pub fn is_additive_cover(cert: &CoverCertificate) -> bool {
    cert.sum().is_one()
}

/// Every point lies in the support of some member.
pub fn supports_cover(family: &FuzzyFamily) -> bool {
    (0..family.width()).all(|x| family.iter().any(|m| m.get(x) > 0))
}

/// An additive cover drawn from `family`, if any exists.
///
/// Greedy: each point still short of 1 gets copies of the member with the
/// largest value there (first in canonical order on ties).
pub fn find_additive_subcover(family: &FuzzyFamily) -> Option<CoverCertificate> {
    greedy_multiplicities(family).map(|mult| certificate_from(family, &mult))
}

fn greedy_multiplicities(family: &FuzzyFamily) -> Option<Vec<u32>> {
    if family.is_empty() || !supports_cover(family) {
        return None;
    }
    let chain = family.chain();
    let n = chain.n() as u32;
    let members = family.members();
    let mut mult = vec![0u32; members.len()];
    let mut sum = vec![0u32; family.width()];
    for x in 0..family.width() {
        if sum[x] >= n {
            continue;
        }
        let (best, _) = members
            .iter()
            .enumerate()
            .rev()
            .max_by_key(|(_, m)| m.get(x))
            .expect("nonempty family");
        let v = members[best].get(x) as u32;
        let k = (n - sum[x]).div_ceil(v).min(n - mult[best]);
        mult[best] += k;
        for (s, &a) in sum.iter_mut().zip(members[best].values()) {
            *s = (*s + k * a as u32).min(n);
        }
    }
    debug_assert!(sum.iter().all(|&s| s >= n));
    Some(mult)
}

fn certificate_from(family: &FuzzyFamily, mult: &[u32]) -> CoverCertificate {
    CoverCertificate::from_validated(
        family
            .iter()
            .zip(mult)
            .filter(|(_, &m)| m > 0)
            .map(|(s, &m)| (s.clone(), m))
            .collect(),
    )
}

/// Brute force over every multiplicity vector in `0..=n`, visited in
/// decreasing lexicographic order; returns the first that sums to 𝟏.
///
/// Independent of the support criterion. `budget` counts visited vectors.
pub fn exhaustive_additive_subcover(
    family: &FuzzyFamily,
    budget: u64,
) -> Result<Option<CoverCertificate>> {
    let n = family.chain().n() as u32;
    let members = family.members();
    let w = family.width();
    let mut mult = vec![n; members.len()];
    let mut visited = 0u64;
    loop {
        visited += 1;
        if visited > budget {
            return Err(Error::Resource {
                what: "certificate search nodes",
                cap: budget,
                size: visited,
            });
        }
        let covers = (0..w).all(|x| {
            let total: u32 = members
                .iter()
                .zip(&mult)
                .map(|(m, &k)| k * m.get(x) as u32)
                .sum();
            total >= n
        });
        if covers && mult.iter().any(|&k| k > 0) {
            return Ok(Some(certificate_from(family, &mult)));
        }
        // Decrement the odometer.
        let mut i = members.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if mult[i] > 0 {
                mult[i] -= 1;
                break;
            }
            mult[i] = n;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum CompactnessMode {
    /// Every finite space over Ł_n is compact and strongly compact.
    #[default]
    Analytic,
    /// Enumerate open covers and search certificates by brute force.
    Oracle,
}

/// Outcome of a compactness decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactnessReport {
    pub compact: bool,
    pub mode: CompactnessMode,
    /// Covers examined by the oracle (0 in analytic mode).
    pub covers_checked: u64,
    /// A cover with no additive (or finite) subcover, if one was found.
    pub counterexample: Option<FuzzyFamily>,
    /// Certificate for the cover consisting of all opens.
    pub sample: Option<CoverCertificate>,
}

/// Opens count up to which the oracle enumerates every subfamily.
pub const FULL_ENUMERATION_LIMIT: usize = 16;

/// Every open cover contains an additive cover.
pub fn is_compact(
    topology: &Topology,
    mode: CompactnessMode,
    settings: &Settings,
) -> Result<CompactnessReport> {
    decide(topology, mode, settings, |cover| {
        exhaustive_additive_subcover(cover, settings.max_nodes).map(|c| c.is_some())
    })
}

/// Every open cover contains a finite subcover.
pub fn is_strongly_compact(
    topology: &Topology,
    mode: CompactnessMode,
    settings: &Settings,
) -> Result<CompactnessReport> {
    decide(topology, mode, settings, |cover| {
        minimal_subcover(cover, settings).map(|s| s.is_some())
    })
}

fn decide<F>(
    topology: &Topology,
    mode: CompactnessMode,
    settings: &Settings,
    has_subcover: F,
) -> Result<CompactnessReport>
where
    F: Fn(&FuzzyFamily) -> Result<bool> + Sync + Send,
{
    let sample = find_additive_subcover(topology.opens());
    if mode == CompactnessMode::Analytic {
        return Ok(CompactnessReport {
            compact: true,
            mode,
            covers_checked: 0,
            counterexample: None,
            sample,
        });
    }
    let opens = topology.opens();
    let (checked, counterexample) = if opens.len() <= FULL_ENUMERATION_LIMIT {
        enumerate_all_covers(opens, settings, &has_subcover)?
    } else {
        enumerate_minimal_covers(opens, settings, &has_subcover)?
    };
    Ok(CompactnessReport {
        compact: counterexample.is_none(),
        mode,
        covers_checked: checked,
        counterexample,
        sample,
    })
}

fn subfamily(opens: &FuzzyFamily, pick: impl Iterator<Item = usize>) -> FuzzyFamily {
    let members = opens.members();
    FuzzyFamily::new(opens.chain(), opens.width(), pick.map(|i| members[i].clone()))
        .expect("subfamily of a family")
}

type Scan = (u64, Option<FuzzyFamily>);

/// Every nonempty subfamily that covers.
fn enumerate_all_covers<F>(opens: &FuzzyFamily, settings: &Settings, check: &F) -> Result<Scan>
where
    F: Fn(&FuzzyFamily) -> Result<bool> + Sync + Send,
{
    let m = opens.len();
    let masks = 1usize << m;
    if masks as u64 > settings.max_nodes {
        return Err(Error::Resource {
            what: "oracle covers",
            cap: settings.max_nodes,
            size: masks as u64,
        });
    }
    let checked = AtomicU64::new(0);
    let found = settings.exec.find_first_range(masks, |mask| {
        let cover = subfamily(opens, (0..m).filter(|i| mask >> i & 1 == 1));
        if !is_cover(&cover) {
            return None;
        }
        checked.fetch_add(1, Ordering::Relaxed);
        match check(&cover) {
            Ok(true) => None,
            Ok(false) => Some(Ok(cover)),
            Err(e) => Some(Err(e)),
        }
    });
    let checked = checked.into_inner();
    match found {
        None => Ok((checked, None)),
        Some((_, Ok(cover))) => Ok((checked, Some(cover))),
        Some((_, Err(e))) => Err(e),
    }
}

/// Covers built by picking, for each point not yet reaching 1, an open that
/// is 1 there. Every cover contains one of these, and containing an
/// additive (or finite) subcover is inherited by supersets, so checking
/// them decides the question for all covers.
fn enumerate_minimal_covers<F>(opens: &FuzzyFamily, settings: &Settings, check: &F) -> Result<Scan>
where
    F: Fn(&FuzzyFamily) -> Result<bool> + Sync + Send,
{
    let n = opens.chain().n();
    let w = opens.width();
    let full_at: Vec<Vec<usize>> = (0..w)
        .map(|x| {
            opens
                .iter()
                .enumerate()
                .filter(|(_, o)| o.get(x) == n)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    if full_at.iter().any(Vec::is_empty) {
        // 𝟏 is always open, so this is only reachable for malformed input.
        return Ok((0, None));
    }
    let nodes = AtomicU64::new(0);
    let checked = AtomicU64::new(0);

    struct Walk<'a, F> {
        opens: &'a FuzzyFamily,
        full_at: &'a [Vec<usize>],
        n: u8,
        nodes: &'a AtomicU64,
        checked: &'a AtomicU64,
        budget: u64,
        check: &'a F,
    }

    impl<F> Walk<'_, F>
    where
        F: Fn(&FuzzyFamily) -> Result<bool>,
    {
        fn go(&self, x: usize, chosen: &mut Vec<usize>) -> Result<Option<FuzzyFamily>> {
            let visited = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            if visited > self.budget {
                return Err(Error::Resource {
                    what: "oracle nodes",
                    cap: self.budget,
                    size: visited,
                });
            }
            let members = self.opens.members();
            let Some(x) = (x..self.full_at.len())
                .find(|&p| !chosen.iter().any(|&i| members[i].get(p) == self.n))
            else {
                self.checked.fetch_add(1, Ordering::Relaxed);
                let cover = subfamily(self.opens, chosen.iter().copied());
                return Ok((!(self.check)(&cover)?).then_some(cover));
            };
            for &i in &self.full_at[x] {
                chosen.push(i);
                let r = self.go(x + 1, chosen);
                chosen.pop();
                if let Some(c) = r? {
                    return Ok(Some(c));
                }
            }
            Ok(None)
        }
    }

    let walk = Walk {
        opens,
        full_at: &full_at,
        n,
        nodes: &nodes,
        checked: &checked,
        budget: settings.max_nodes,
        check,
    };
    // Split on the choice made for point 0.
    let first = &full_at[0];
    let found = settings
        .exec
        .find_first_range(first.len(), |k| walk.go(1, &mut vec![first[k]]).transpose());
    let checked = checked.into_inner();
    match found {
        None => Ok((checked, None)),
        Some((_, Ok(c))) => Ok((checked, Some(c))),
        Some((_, Err(e))) => Err(e),
    }
}

/// Solver output with the number of search nodes expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved<T> {
    pub solution: T,
    pub nodes: u64,
}

/// Additive cover from `family` of least total multiplicity.
///
/// Integer program: choose `m_α ∈ 0..=n` minimizing `Σ m_α` subject to
/// `Σ m_α·α(x) ≥ n` at every point. Exact branch-and-bound seeded with the
/// greedy solution. Among optimal solutions the one whose multiplicity
/// vector, read in canonical order of the family, is lexicographically
/// greatest wins.
pub fn minimal_additive_cover(
    family: &FuzzyFamily,
    settings: &Settings,
) -> Result<Option<Solved<CoverCertificate>>> {
    let Some(greedy) = greedy_multiplicities(family) else {
        return Ok(None);
    };
    let members = family.members();
    let n = family.chain().n() as u32;
    let w = family.width();

    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(members[i].support().count()), i));
    // suffix_max[d][x]: largest value at x among order[d..].
    let mut suffix_max = vec![vec![0u32; w]; order.len() + 1];
    for d in (0..order.len()).rev() {
        let row: Vec<u32> = (0..w)
            .map(|x| suffix_max[d + 1][x].max(members[order[d]].get(x) as u32))
            .collect();
        suffix_max[d] = row;
    }

    struct Search<'a> {
        members: &'a [FuzzySet],
        order: &'a [usize],
        suffix_max: &'a [Vec<u32>],
        n: u32,
        mult: Vec<u32>,
        best: Vec<u32>,
        best_total: u32,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn better(&self, total: u32) -> bool {
            total < self.best_total || (total == self.best_total && self.mult > self.best)
        }

        fn go(&mut self, depth: usize, sum: &[u32], total: u32) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Resource {
                    what: "solver nodes",
                    cap: self.budget,
                    size: self.nodes,
                });
            }
            let mut bound = 0;
            for (x, &s) in sum.iter().enumerate() {
                if s < self.n {
                    let r = self.suffix_max[depth][x];
                    if r == 0 {
                        return Ok(());
                    }
                    bound = bound.max((self.n - s).div_ceil(r));
                }
            }
            if bound == 0 {
                if self.better(total) {
                    self.best = self.mult.clone();
                    self.best_total = total;
                }
                return Ok(());
            }
            if total + bound > self.best_total {
                return Ok(());
            }
            let idx = self.order[depth];
            let set = &self.members[idx];
            let useful = sum
                .iter()
                .enumerate()
                .filter(|&(x, &s)| s < self.n && set.get(x) > 0)
                .map(|(x, &s)| (self.n - s).div_ceil(set.get(x) as u32))
                .max()
                .unwrap_or(0);
            for k in (0..=useful).rev() {
                let next: Vec<u32> = sum
                    .iter()
                    .zip(set.values())
                    .map(|(&s, &a)| (s + k * a as u32).min(self.n))
                    .collect();
                self.mult[idx] = k;
                self.go(depth + 1, &next, total + k)?;
                self.mult[idx] = 0;
            }
            Ok(())
        }
    }

    let mut search = Search {
        members,
        order: &order,
        suffix_max: &suffix_max,
        n,
        mult: vec![0; members.len()],
        best_total: greedy.iter().sum(),
        best: greedy,
        nodes: 0,
        budget: settings.max_nodes,
    };
    search.go(0, &vec![0; w], 0)?;
    Ok(Some(Solved {
        solution: certificate_from(family, &search.best),
        nodes: search.nodes,
    }))
}

/// Smallest subfamily whose join is 𝟏.
///
/// A member helps only at points where it equals 1, so this is set cover
/// over those points. Ties go to the lexicographically smallest list of
/// canonical member indices.
pub fn minimal_subcover(
    family: &FuzzyFamily,
    settings: &Settings,
) -> Result<Option<Solved<FuzzyFamily>>> {
    let n = family.chain().n();
    let w = family.width();
    let members = family.members();
    let full: Vec<Vec<bool>> = members
        .iter()
        .map(|m| m.values().iter().map(|&v| v == n).collect())
        .collect();
    let candidates: Vec<Vec<usize>> = (0..w)
        .map(|x| (0..members.len()).filter(|&i| full[i][x]).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let widest = full
        .iter()
        .map(|f| f.iter().filter(|&&b| b).count())
        .max()
        .unwrap_or(1)
        .max(1);

    struct Search<'a> {
        full: &'a [Vec<bool>],
        candidates: &'a [Vec<usize>],
        widest: usize,
        best: Option<Vec<usize>>,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn go(&mut self, covered: &mut Vec<u32>, chosen: &mut Vec<usize>) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Resource {
                    what: "solver nodes",
                    cap: self.budget,
                    size: self.nodes,
                });
            }
            let uncovered: Vec<usize> = (0..covered.len()).filter(|&x| covered[x] == 0).collect();
            if uncovered.is_empty() {
                let mut pick = chosen.clone();
                pick.sort_unstable();
                let improves = match &self.best {
                    None => true,
                    Some(b) => pick.len() < b.len() || (pick.len() == b.len() && pick < *b),
                };
                if improves {
                    self.best = Some(pick);
                }
                return Ok(());
            }
            let bound = uncovered.len().div_ceil(self.widest);
            if let Some(b) = &self.best {
                if chosen.len() + bound > b.len() {
                    return Ok(());
                }
            }
            let x = *uncovered
                .iter()
                .min_by_key(|&&x| (self.candidates[x].len(), x))
                .expect("nonempty");
            for &i in &self.candidates[x] {
                if chosen.contains(&i) {
                    continue;
                }
                for (c, &f) in covered.iter_mut().zip(&self.full[i]) {
                    *c += f as u32;
                }
                chosen.push(i);
                let r = self.go(covered, chosen);
                chosen.pop();
                for (c, &f) in covered.iter_mut().zip(&self.full[i]) {
                    *c -= f as u32;
                }
                r?;
            }
            Ok(())
        }
    }

    let mut search = Search {
        full: &full,
        candidates: &candidates,
        widest,
        best: None,
        nodes: 0,
        budget: settings.max_nodes,
    };
    search.go(&mut vec![0; w], &mut Vec::new())?;
    let pick = search.best.expect("feasible instance has a cover");
    Ok(Some(Solved {
        solution: subfamily(family, pick.into_iter()),
        nodes: search.nodes,
    }))
}

/// Output of [`product_subbasic_subcover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubbasicSubcover {
    /// The factor all certificate entries are lifted from.
    pub factor: usize,
    pub certificate: CoverCertificate,
}

/// Extracts an additive cover from a cover of a product by subbasic opens
/// `α ∘ π_i`, each given as `(i, α)` with `α` open in factor `i`.
///
/// Finds the first factor `j` whose members' supports cover `X_j`, picks
/// for every `x ∈ X_j` the canonically first `α_x` positive at `x` with the
/// least multiplicity saturating `α_x(x)`, and lifts those sets along
/// `π_j`. If no such factor exists, the point `a = (a_i)` assembled from
/// one uncovered point per factor is outside every support, and the input
/// was not a cover.
pub fn product_subbasic_subcover(
    product: &ProductSpace,
    family: &[(usize, FuzzySet)],
) -> Result<SubbasicSubcover> {
    let factors = product.factors();
    let mut per_factor: Vec<Vec<&FuzzySet>> = vec![Vec::new(); factors.len()];
    for (i, alpha) in family {
        let factor = factors
            .get(*i)
            .ok_or_else(|| Error::invalid(format!("no factor {i}")))?;
        if !factor.is_open(alpha) {
            return Err(Error::invalid(format!("{alpha} is not open in factor {i}")));
        }
        per_factor[*i].push(alpha);
    }
    for sets in &mut per_factor {
        sets.sort();
        sets.dedup();
    }
    let uncovered: Vec<Option<usize>> = factors
        .iter()
        .zip(&per_factor)
        .map(|(f, sets)| (0..f.width()).find(|&x| sets.iter().all(|s| s.get(x) == 0)))
        .collect();
    let Some(j) = uncovered.iter().position(Option::is_none) else {
        let a: Vec<usize> = uncovered.iter().map(|u| u.expect("every factor fails")).collect();
        let point = product.point(&a).expect("coordinates in range");
        return Err(Error::Precondition(format!(
            "not a cover: the point a = {} lies outside every member",
            product.carrier().label(point)
        )));
    };
    let chain = product.chain();
    let mut chosen: Vec<(&FuzzySet, u32)> = Vec::new();
    for x in 0..factors[j].width() {
        let alpha = per_factor[j]
            .iter()
            .find(|s| s.get(x) > 0)
            .expect("factor j is covered by supports");
        let k = chain
            .saturating_multiplicity(alpha.get(x))
            .expect("positive value");
        match chosen.iter_mut().find(|(s, _)| s == alpha) {
            Some((_, m)) => *m = (*m).max(k),
            None => chosen.push((alpha, k)),
        }
    }
    let entries = chosen
        .into_iter()
        .map(|(s, k)| product.lift(j, s).map(|lifted| (lifted, k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SubbasicSubcover {
        factor: j,
        certificate: CoverCertificate::new(entries)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;
    use crate::fuzzy::Carrier;
    use crate::topology::generate_from_subbase;

    fn ch(n: u32) -> Chain {
        Chain::new(n).unwrap()
    }

    fn fs(n: u32, v: &[u32]) -> FuzzySet {
        FuzzySet::new(ch(n), v.iter().copied()).unwrap()
    }

    fn fam(n: u32, w: usize, sets: &[&[u32]]) -> FuzzyFamily {
        FuzzyFamily::new(ch(n), w, sets.iter().map(|v| fs(n, v))).unwrap()
    }

    fn entries(c: &CoverCertificate) -> Vec<(Vec<u8>, u32)> {
        c.entries().iter().map(|(s, m)| (s.values().to_vec(), *m)).collect()
    }

    #[test]
    fn cover_predicates() {
        assert!(is_cover(&fam(2, 2, &[&[2, 2]])));
        assert!(is_cover(&fam(2, 2, &[&[1, 2], &[2, 0]])));
        assert!(!is_cover(&fam(2, 2, &[&[1, 2], &[1, 0]])));
        let c = CoverCertificate::new(vec![(fs(2, &[1, 1]), 2)]).unwrap();
        assert!(is_additive_cover(&c));
        assert!(CoverCertificate::new(vec![(fs(2, &[1, 1]), 1)]).is_err());
        assert!(CoverCertificate::from_entries(vec![(fs(2, &[1, 1]), 0)]).is_err());
    }

    #[test]
    fn greedy_examples() {
        let c = find_additive_subcover(&fam(2, 2, &[&[1, 2], &[2, 0]])).unwrap();
        assert_eq!(entries(&c), vec![(vec![1, 2], 1), (vec![2, 0], 1)]);
        let c = find_additive_subcover(&fam(2, 2, &[&[1, 1]])).unwrap();
        assert_eq!(entries(&c), vec![(vec![1, 1], 2)]);
        assert!(find_additive_subcover(&fam(2, 2, &[&[0, 2]])).is_none());
        assert!(find_additive_subcover(&FuzzyFamily::empty(ch(2), 2)).is_none());
    }

    #[test]
    fn exhaustive_search_examples() {
        let c = exhaustive_additive_subcover(&fam(2, 1, &[&[1], &[2]]), 1000).unwrap().unwrap();
        assert!(is_additive_cover(&c));
        assert!(exhaustive_additive_subcover(&fam(2, 2, &[&[0, 2]]), 1000).unwrap().is_none());
        assert!(exhaustive_additive_subcover(&fam(3, 3, &[&[1, 1, 0]]), 2)
            .unwrap_err()
            .is_resource());
        // the singleton space: {[1]} alone is an additive cover as 2×[1]
        let c = exhaustive_additive_subcover(&fam(2, 1, &[&[1]]), 1000).unwrap().unwrap();
        assert_eq!(entries(&c), vec![(vec![1], 2)]);
    }

    #[test]
    fn minimal_additive_examples() {
        let s = Settings::default();
        let r = minimal_additive_cover(&fam(2, 2, &[&[1, 1], &[2, 0]]), &s).unwrap().unwrap();
        assert_eq!(entries(&r.solution), vec![(vec![1, 1], 2)]);
        assert_eq!(r.solution.total(), 2);
        let r = minimal_additive_cover(&fam(2, 2, &[&[2, 2], &[1, 0]]), &s).unwrap().unwrap();
        assert_eq!(entries(&r.solution), vec![(vec![2, 2], 1)]);
        let r = minimal_additive_cover(&fam(1, 3, &[&[1, 0, 0], &[0, 1, 1]]), &s).unwrap().unwrap();
        assert_eq!(entries(&r.solution), vec![(vec![0, 1, 1], 1), (vec![1, 0, 0], 1)]);
        assert!(minimal_additive_cover(&fam(2, 2, &[&[0, 2]]), &s).unwrap().is_none());
    }

    #[test]
    fn minimal_subcover_examples() {
        let s = Settings::default();
        let r = minimal_subcover(&fam(2, 2, &[&[2, 2], &[2, 0]]), &s).unwrap().unwrap();
        assert_eq!(r.solution, fam(2, 2, &[&[2, 2]]));
        let r = minimal_subcover(&fam(1, 2, &[&[1, 0], &[0, 1], &[1, 1]]), &s).unwrap().unwrap();
        assert_eq!(r.solution, fam(1, 2, &[&[1, 1]]));
        let r = minimal_subcover(&fam(2, 2, &[&[2, 1], &[1, 2]]), &s).unwrap().unwrap();
        assert_eq!(r.solution.len(), 2);
        assert!(minimal_subcover(&fam(2, 2, &[&[1, 1]]), &s).unwrap().is_none());
    }

    #[test]
    fn compactness_of_small_spaces() {
        let s = Settings::default();
        let one = Carrier::indexed(1).unwrap();
        let t = Topology::new(one, fam(2, 1, &[&[0], &[1], &[2]])).unwrap();
        let oracle = is_compact(&t, CompactnessMode::Oracle, &s).unwrap();
        assert!(oracle.compact);
        // covers: {[2]}, {[0],[2]}, {[1],[2]}, {[0],[1],[2]}
        assert_eq!(oracle.covers_checked, 4);
        assert!(is_strongly_compact(&t, CompactnessMode::Oracle, &s).unwrap().compact);

        let ind = Topology::indiscrete(Carrier::indexed(3).unwrap(), ch(3));
        assert!(is_compact(&ind, CompactnessMode::Oracle, &s).unwrap().compact);
        assert!(is_compact(&ind, CompactnessMode::Analytic, &s).unwrap().compact);
    }

    #[test]
    fn reduced_oracle_handles_large_spaces() {
        let s = Settings::default();
        let three = Carrier::indexed(3).unwrap();
        let t = generate_from_subbase(&three, &fam(2, 3, &[&[1, 2, 0], &[0, 1, 2], &[2, 0, 1]]), &s)
            .unwrap();
        assert!(t.opens().len() > FULL_ENUMERATION_LIMIT);
        let r = is_compact(&t, CompactnessMode::Oracle, &s).unwrap();
        assert!(r.compact);
        assert!(r.covers_checked > 0);
        let tight = Settings { max_nodes: 3, ..s };
        assert!(is_compact(&t, CompactnessMode::Oracle, &tight).unwrap_err().is_resource());
    }

    #[test]
    fn subbasic_extraction_examples() {
        let s = Settings::default();
        let point = |labels: [&str; 1]| {
            Topology::new(Carrier::new(labels).unwrap(), fam(2, 1, &[&[0], &[1], &[2]])).unwrap()
        };
        let p = ProductSpace::new(vec![point(["p"]), point(["q"])], &s).unwrap();
        let out = product_subbasic_subcover(&p, &[(0, fs(2, &[1]))]).unwrap();
        assert_eq!(out.factor, 0);
        assert_eq!(entries(&out.certificate), vec![(vec![1], 2)]);
        let out = product_subbasic_subcover(&p, &[(1, fs(2, &[2])), (0, fs(2, &[0]))]).unwrap();
        assert_eq!(out.factor, 1);
        assert_eq!(entries(&out.certificate), vec![(vec![2], 1)]);

        let two = Topology::discrete_crisp(Carrier::new(["a", "b"]).unwrap(), ch(1));
        let three = Topology::discrete_crisp(Carrier::new(["u", "v", "w"]).unwrap(), ch(1));
        let q = ProductSpace::new(vec![two, three], &s).unwrap();
        let out = product_subbasic_subcover(&q, &[(0, FuzzySet::one(ch(1), 2))]).unwrap();
        assert_eq!(entries(&out.certificate), vec![(vec![1; 6], 1)]);

        let err = product_subbasic_subcover(
            &q,
            &[(0, FuzzySet::crisp(ch(1), 2, &[0])), (1, FuzzySet::crisp(ch(1), 3, &[0, 2]))],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::Precondition("not a cover: the point a = (b,v) lies outside every member".into())
        );
        assert!(product_subbasic_subcover(&q, &[(0, fs(1, &[1, 1, 0]))]).is_err());
        assert!(product_subbasic_subcover(&q, &[(5, fs(1, &[1, 1]))]).is_err());
    }
}
