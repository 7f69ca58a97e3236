//! MV-topologies: construction from subbases and decidable predicates.

mod closure;
mod metric;

pub use metric::{FuzzyPoint, MetricInstance, MetricTopology};

use crate::chain::{BinOp, Chain};
use crate::covers::{self, CompactnessMode};
use crate::error::{Error, Result};
use crate::fuzzy::{Carrier, FuzzyFamily, FuzzySet};
use crate::par::Exec;

/// Resource caps and execution strategy shared by the expensive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    /// Largest family any closure may produce.
    pub max_opens: usize,
    /// Node budget for searches and oracle enumerations.
    pub max_nodes: u64,
    pub exec: Exec,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_opens: 20_000,
            max_nodes: 1_000_000,
            exec: Exec::default(),
        }
    }
}

impl Settings {
    pub fn sequential() -> Self {
        Settings {
            exec: Exec::Sequential,
            ..Settings::default()
        }
    }
}

/// A finite MV-topological space, stored extensionally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    carrier: Carrier,
    chain: Chain,
    opens: FuzzyFamily,
}

impl Topology {
    /// Wraps an explicit family of opens, rejecting it unless it satisfies
    /// the topology axioms.
    pub fn new(carrier: Carrier, opens: FuzzyFamily) -> Result<Self> {
        if opens.width() != carrier.len() {
            return Err(Error::mismatch("opens do not live on the carrier"));
        }
        if let Some(why) = topology_violation(&opens) {
            return Err(Error::invalid(format!("not an MV-topology: {why}")));
        }
        Ok(Topology {
            chain: opens.chain(),
            carrier,
            opens,
        })
    }

    pub(crate) fn from_parts_unchecked(carrier: Carrier, opens: FuzzyFamily) -> Self {
        debug_assert!(is_topology(&opens));
        Topology {
            chain: opens.chain(),
            carrier,
            opens,
        }
    }

    /// `{𝟎, 𝟏}`.
    pub fn indiscrete(carrier: Carrier, chain: Chain) -> Self {
        let w = carrier.len();
        let opens =
            FuzzyFamily::from_unsorted(chain, w, vec![FuzzySet::zero(chain, w), FuzzySet::one(chain, w)]);
        Topology {
            carrier,
            chain,
            opens,
        }
    }

    /// Every fuzzy set is open.
    pub fn discrete(carrier: Carrier, chain: Chain) -> Self {
        let opens = FuzzyFamily::all(chain, carrier.len());
        Topology {
            carrier,
            chain,
            opens,
        }
    }

    /// Every crisp set is open.
    pub fn discrete_crisp(carrier: Carrier, chain: Chain) -> Self {
        let w = carrier.len();
        let members = (0u32..1 << w)
            .map(|mask| {
                let pts: Vec<usize> = (0..w).filter(|i| mask >> i & 1 == 1).collect();
                FuzzySet::crisp(chain, w, &pts)
            })
            .collect();
        Topology {
            carrier,
            chain,
            opens: FuzzyFamily::from_unsorted(chain, w, members),
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn width(&self) -> usize {
        self.carrier.len()
    }

    pub fn opens(&self) -> &FuzzyFamily {
        &self.opens
    }

    pub fn is_open(&self, set: &FuzzySet) -> bool {
        self.opens.contains(set)
    }

    pub fn is_closed(&self, set: &FuzzySet) -> bool {
        self.opens.contains(&set.complement())
    }

    /// `Ξ = {o* : o open}`.
    pub fn closed_sets(&self) -> FuzzyFamily {
        self.opens.complements()
    }

    pub fn clopens(&self) -> FuzzyFamily {
        self.opens.intersection(&self.closed_sets())
    }

    /// Clopens form a base.
    pub fn is_zero_dimensional(&self) -> bool {
        is_base(&self.clopens(), self)
    }

    pub fn hausdorff(&self) -> HausdorffReport {
        hausdorff_report(self)
    }

    pub fn is_hausdorff(&self) -> bool {
        self.hausdorff().separated
    }

    /// Compact, Hausdorff and zero-dimensional.
    pub fn is_stone(&self, mode: CompactnessMode, settings: &Settings) -> Result<bool> {
        let compact = covers::is_compact(self, mode, settings)?.compact;
        Ok(compact && self.is_hausdorff() && self.is_zero_dimensional())
    }
}

/// Least family containing `subbase` closed under binary ⊕, ⊙ and ∧.
pub fn base_from_subbase(subbase: &FuzzyFamily, settings: &Settings) -> Result<FuzzyFamily> {
    let members = closure::close(
        subbase.members().to_vec(),
        &BinOp::TERM_OPS,
        settings.max_opens,
        settings.exec,
        "base",
    )?;
    Ok(FuzzyFamily::from_unsorted(subbase.chain(), subbase.width(), members))
}

/// The MV-topology generated by `subbase`: all joins of term values.
pub fn generate_from_subbase(
    carrier: &Carrier,
    subbase: &FuzzyFamily,
    settings: &Settings,
) -> Result<Topology> {
    if subbase.width() != carrier.len() {
        return Err(Error::mismatch("subbase does not live on the carrier"));
    }
    let base = base_from_subbase(subbase, settings)?;
    let (chain, w) = (subbase.chain(), subbase.width());
    let mut seed = base.members().to_vec();
    seed.push(FuzzySet::zero(chain, w));
    seed.push(FuzzySet::one(chain, w));
    let members = closure::close(seed, &[BinOp::Join], settings.max_opens, settings.exec, "opens")?;
    Ok(Topology::from_parts_unchecked(
        carrier.clone(),
        FuzzyFamily::from_unsorted(chain, w, members),
    ))
}

fn topology_violation(family: &FuzzyFamily) -> Option<String> {
    let (chain, w) = (family.chain(), family.width());
    if !family.contains(&FuzzySet::zero(chain, w)) {
        return Some("𝟎 is missing".into());
    }
    if !family.contains(&FuzzySet::one(chain, w)) {
        return Some("𝟏 is missing".into());
    }
    let members = family.members();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i..] {
            for op in [BinOp::Oplus, BinOp::Odot, BinOp::Meet, BinOp::Join] {
                let c = a.combine_unchecked(op, b);
                if !family.contains(&c) {
                    return Some(format!("{a} {} {b} = {c} is missing", op.symbol()));
                }
            }
        }
    }
    None
}

/// Checks the axioms directly: 𝟎, 𝟏 present and closure under binary ⊕, ⊙,
/// ∧, ∨ (arbitrary joins reduce to binary ones on a finite family).
pub fn is_topology(family: &FuzzyFamily) -> bool {
    topology_violation(family).is_none()
}

/// Every open is the join of the members of `base` lying below it.
pub fn is_base(base: &FuzzyFamily, topology: &Topology) -> bool {
    if base.width() != topology.width() || base.chain() != topology.chain() {
        return false;
    }
    if !base.is_subset_of(topology.opens()) {
        return false;
    }
    topology.opens().iter().all(|o| {
        let below = FuzzyFamily::from_unsorted(
            base.chain(),
            base.width(),
            base.iter().filter(|b| b.leq(o)).cloned().collect(),
        );
        below.join() == *o
    })
}

/// `subbase` generates exactly the opens of `topology`.
pub fn is_subbase(subbase: &FuzzyFamily, topology: &Topology, settings: &Settings) -> Result<bool> {
    if subbase.width() != topology.width() || subbase.chain() != topology.chain() {
        return Ok(false);
    }
    if !subbase.is_subset_of(topology.opens()) {
        return Ok(false);
    }
    let generated = generate_from_subbase(topology.carrier(), subbase, settings)?;
    Ok(generated.opens() == topology.opens())
}

/// Closed under every multiple `k·α`.
///
/// Multiples stabilize at `k = n`, so checking `k ∈ 2..=n` is exhaustive.
pub fn is_large_subbase(subbase: &FuzzyFamily) -> bool {
    let n = subbase.chain().n() as u32;
    subbase
        .iter()
        .all(|a| (2..=n).all(|k| subbase.contains(&a.scale(k))))
}

/// Two opens separating a pair of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingPair {
    pub x: usize,
    pub y: usize,
    /// Takes value 1 at `x`.
    pub around_x: FuzzySet,
    /// Takes value 1 at `y`.
    pub around_y: FuzzySet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HausdorffReport {
    pub separated: bool,
    /// One witness per pair `x < y`, first in canonical order.
    pub witnesses: Vec<SeparatingPair>,
    /// First pair that cannot be separated.
    pub failure: Option<(usize, usize)>,
}

/// First pair `(o_x, o_y)` in canonical order with `o_x(x) = o_y(y) = 1`
/// and `o_x ∧ o_y = 𝟎`.
pub fn separate(topology: &Topology, x: usize, y: usize) -> Option<SeparatingPair> {
    let n = topology.chain().n();
    let opens = topology.opens().members();
    let at_y: Vec<&FuzzySet> = opens.iter().filter(|o| o.get(y) == n).collect();
    opens.iter().filter(|o| o.get(x) == n).find_map(|ox| {
        at_y.iter()
            .find(|oy| ox.combine_unchecked(BinOp::Meet, oy).is_zero())
            .map(|oy| SeparatingPair {
                x,
                y,
                around_x: ox.clone(),
                around_y: (*oy).clone(),
            })
    })
}

fn hausdorff_report(topology: &Topology) -> HausdorffReport {
    let w = topology.width();
    let mut witnesses = Vec::new();
    for x in 0..w {
        for y in x + 1..w {
            match separate(topology, x, y) {
                Some(p) => witnesses.push(p),
                None => {
                    return HausdorffReport {
                        separated: false,
                        witnesses,
                        failure: Some((x, y)),
                    }
                }
            }
        }
    }
    HausdorffReport {
        separated: true,
        witnesses,
        failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(n: u32) -> Chain {
        Chain::new(n).unwrap()
    }

    fn fs(n: u32, v: &[u32]) -> FuzzySet {
        FuzzySet::new(ch(n), v.iter().copied()).unwrap()
    }

    fn fam(n: u32, w: usize, sets: &[&[u32]]) -> FuzzyFamily {
        FuzzyFamily::new(ch(n), w, sets.iter().map(|v| fs(n, v))).unwrap()
    }

    #[test]
    fn closure_examples() {
        let s = Settings::default();
        assert!(base_from_subbase(&FuzzyFamily::empty(ch(2), 1), &s).unwrap().is_empty());
        let b = base_from_subbase(&fam(2, 1, &[&[1]]), &s).unwrap();
        assert_eq!(b, fam(2, 1, &[&[0], &[1], &[2]]));
        assert_eq!(base_from_subbase(&b, &s).unwrap(), b);
    }

    #[test]
    fn generation_examples() {
        let s = Settings::default();
        let one = Carrier::indexed(1).unwrap();
        let t = generate_from_subbase(&one, &fam(2, 1, &[&[1]]), &s).unwrap();
        assert_eq!(t.opens(), &fam(2, 1, &[&[0], &[1], &[2]]));

        let two = Carrier::new(["a", "b"]).unwrap();
        let empty = generate_from_subbase(&two, &FuzzyFamily::empty(ch(2), 2), &s).unwrap();
        assert_eq!(empty, Topology::indiscrete(two.clone(), ch(2)));

        let disc = generate_from_subbase(&two, &fam(1, 2, &[&[1, 0], &[0, 1]]), &s).unwrap();
        assert_eq!(disc.opens().len(), 4);
        assert_eq!(disc, Topology::discrete_crisp(two.clone(), ch(1)));

        let again = generate_from_subbase(&two, disc.opens(), &s).unwrap();
        assert_eq!(again, disc);
    }

    #[test]
    fn cap_breach_reports_resource_error() {
        let s = Settings {
            max_opens: 10,
            ..Settings::default()
        };
        let three = Carrier::indexed(3).unwrap();
        let err = generate_from_subbase(&three, &fam(3, 3, &[&[1, 2, 0], &[0, 1, 3]]), &s)
            .unwrap_err();
        assert!(err.is_resource(), "{err}");
    }

    #[test]
    fn axiom_checks() {
        assert!(is_topology(&fam(2, 1, &[&[0], &[2]])));
        assert!(is_topology(&fam(2, 1, &[&[0], &[1], &[2]])));
        assert!(!is_topology(&fam(2, 1, &[&[0], &[1]])));
        assert!(!is_topology(&fam(2, 2, &[&[0, 0], &[1, 0], &[2, 2]])));
        assert!(Topology::new(Carrier::indexed(1).unwrap(), fam(2, 1, &[&[2]])).is_err());
    }

    #[test]
    fn base_and_subbase_checks() {
        let s = Settings::default();
        let two = Carrier::new(["a", "b"]).unwrap();
        let disc = Topology::discrete_crisp(two, ch(1));
        assert!(is_base(disc.opens(), &disc));
        let singletons = fam(1, 2, &[&[1, 0], &[0, 1]]);
        assert!(is_base(&singletons.with(fs(1, &[0, 0])).unwrap(), &disc));
        assert!(is_subbase(&singletons, &disc, &s).unwrap());
        assert!(!is_base(&fam(1, 2, &[&[1, 0]]), &disc));
        assert!(!is_subbase(&fam(1, 2, &[&[1, 0]]), &disc, &s).unwrap());
    }

    #[test]
    fn large_subbase_examples() {
        assert!(is_large_subbase(&fam(2, 1, &[&[2]])));
        assert!(!is_large_subbase(&fam(2, 1, &[&[1]])));
        assert!(is_large_subbase(&fam(3, 2, &[&[3, 0], &[0, 3], &[3, 3]])));
        assert!(is_large_subbase(&fam(3, 1, &[&[1], &[2], &[3]])));
    }

    #[test]
    fn clopens_and_zero_dimensionality() {
        let one = Carrier::indexed(1).unwrap();
        let t = Topology::new(one, fam(2, 1, &[&[0], &[1], &[2]])).unwrap();
        assert_eq!(t.clopens(), fam(2, 1, &[&[0], &[1], &[2]]));
        assert!(t.is_zero_dimensional());

        let two = Carrier::indexed(2).unwrap();
        let ind = Topology::indiscrete(two.clone(), ch(2));
        assert_eq!(ind.clopens(), *ind.opens());
        assert!(ind.is_zero_dimensional());

        let t = generate_from_subbase(&two, &fam(2, 2, &[&[2, 1]]), &Settings::default()).unwrap();
        assert!(t.opens().len() > 2);
        assert!(!t.is_zero_dimensional());
    }

    #[test]
    fn hausdorff_examples() {
        let one = Carrier::indexed(1).unwrap();
        assert!(Topology::indiscrete(one, ch(2)).is_hausdorff());
        let two = Carrier::new(["a", "b"]).unwrap();
        let ind = Topology::indiscrete(two.clone(), ch(2)).hausdorff();
        assert!(!ind.separated);
        assert_eq!(ind.failure, Some((0, 1)));
        let disc = Topology::discrete_crisp(two, ch(1)).hausdorff();
        assert!(disc.separated);
        assert_eq!(disc.witnesses[0].around_x, fs(1, &[1, 0]));
        assert_eq!(disc.witnesses[0].around_y, fs(1, &[0, 1]));
    }

    #[test]
    fn discrete_crisp_is_stone() {
        let two = Carrier::new(["a", "b"]).unwrap();
        let t = Topology::discrete_crisp(two, ch(1));
        let s = Settings::default();
        assert!(t.is_stone(CompactnessMode::Analytic, &s).unwrap());
        assert!(t.is_stone(CompactnessMode::Oracle, &s).unwrap());
    }
}
