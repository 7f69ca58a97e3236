//! Seeded random instances for the verification suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::chain::Chain;
use crate::fuzzy::{Carrier, FuzzyFamily, FuzzySet, PointMap};
use crate::maps;
use crate::product::ProductSpace;
use crate::term::{Term, TermOp};
use crate::topology::{generate_from_subbase, Settings, Topology};

pub type CaseRng = ChaCha8Rng;

/// Independent stream for case `index` of a run seeded with `seed`.
pub fn case_rng(seed: u64, index: u64) -> CaseRng {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn chain(rng: &mut CaseRng, max_n: u32) -> Chain {
    Chain::new(rng.gen_range(1..=max_n)).expect("positive resolution")
}

pub fn set(rng: &mut CaseRng, chain: Chain, width: usize) -> FuzzySet {
    FuzzySet::from_vec(
        chain,
        (0..width).map(|_| rng.gen_range(0..=chain.n())).collect(),
    )
}

pub fn family(rng: &mut CaseRng, chain: Chain, width: usize, size: usize) -> FuzzyFamily {
    FuzzyFamily::from_unsorted(chain, width, (0..size).map(|_| set(rng, chain, width)).collect())
}

/// Random `(n, |X|, subbase)` with the given bounds.
#[derive(Clone, Copy, Debug)]
pub struct SpaceBounds {
    pub max_points: usize,
    pub max_n: u32,
    pub max_subbase: usize,
    /// Reject topologies with more opens.
    pub max_opens: usize,
}

impl SpaceBounds {
    pub const SMALL: SpaceBounds = SpaceBounds {
        max_points: 2,
        max_n: 2,
        max_subbase: 2,
        max_opens: 6,
    };
}

fn generate(carrier: &Carrier, subbase: &FuzzyFamily, settings: &Settings) -> Option<Topology> {
    generate_from_subbase(carrier, subbase, settings).ok()
}

/// A random space within `bounds`, over a given chain; retries until the
/// opens count fits, falling back to the indiscrete space.
pub fn space_on(rng: &mut CaseRng, chain: Chain, bounds: SpaceBounds, settings: &Settings) -> Topology {
    let width = rng.gen_range(1..=bounds.max_points);
    let carrier = Carrier::indexed(width).expect("nonempty");
    for _ in 0..64 {
        let k = rng.gen_range(0..=bounds.max_subbase);
        let s = family(rng, chain, width, k);
        if let Some(t) = generate(&carrier, &s, settings) {
            if t.opens().len() <= bounds.max_opens {
                return t;
            }
        }
    }
    Topology::indiscrete(carrier, chain)
}

pub fn space(rng: &mut CaseRng, bounds: SpaceBounds, settings: &Settings) -> Topology {
    let c = chain(rng, bounds.max_n);
    space_on(rng, c, bounds, settings)
}

/// Subbase likely to give a Hausdorff space: for most pairs of points, two
/// sets equal to 1 at one point each and disjoint.
pub fn hausdorff_space(rng: &mut CaseRng, chain: Chain, width: usize, settings: &Settings) -> Option<Topology> {
    let n = chain.n();
    let mut members = Vec::new();
    for x in 0..width {
        for y in x + 1..width {
            if rng.gen_bool(0.85) {
                let mut ox = vec![0u8; width];
                let mut oy = vec![0u8; width];
                for z in 0..width {
                    let v = rng.gen_range(0..=n);
                    if rng.gen_bool(0.5) {
                        ox[z] = v;
                    } else {
                        oy[z] = v;
                    }
                }
                ox[x] = n;
                oy[x] = 0;
                oy[y] = n;
                ox[y] = 0;
                members.push(FuzzySet::from_vec(chain, ox));
                members.push(FuzzySet::from_vec(chain, oy));
            }
        }
    }
    if rng.gen_bool(0.5) {
        members.push(set(rng, chain, width));
    }
    let carrier = Carrier::indexed(width).ok()?;
    generate(&carrier, &FuzzyFamily::from_unsorted(chain, width, members), settings)
}

/// Subbase of sets together with their complements; generates a
/// zero-dimensional space.
pub fn zero_dimensional_space(rng: &mut CaseRng, chain: Chain, width: usize, settings: &Settings) -> Option<Topology> {
    let k = rng.gen_range(0..=2);
    let mut members = Vec::new();
    for _ in 0..k {
        let a = set(rng, chain, width);
        members.push(a.complement());
        members.push(a);
    }
    let carrier = Carrier::indexed(width).ok()?;
    generate(&carrier, &FuzzyFamily::from_unsorted(chain, width, members), settings)
}

/// Crisp partitions plus complemented fuzzy sets; usually Stone.
pub fn stone_space(rng: &mut CaseRng, chain: Chain, width: usize, settings: &Settings) -> Option<Topology> {
    let mut members = Vec::new();
    for x in 0..width {
        if rng.gen_bool(0.9) {
            let single = FuzzySet::crisp(chain, width, &[x]);
            members.push(single.complement());
            members.push(single);
        }
    }
    if rng.gen_bool(0.5) {
        let a = set(rng, chain, width);
        members.push(a.complement());
        members.push(a);
    }
    let carrier = Carrier::indexed(width).ok()?;
    generate(&carrier, &FuzzyFamily::from_unsorted(chain, width, members), settings)
}

pub fn map(rng: &mut CaseRng, domain: &Carrier, codomain: &Carrier) -> PointMap {
    let images = (0..domain.len())
        .map(|_| rng.gen_range(0..codomain.len()))
        .collect();
    PointMap::new(domain.clone(), codomain.clone(), images).expect("indices in range")
}

/// A random continuous map, or `None` after `tries` rejected draws.
pub fn continuous_map(
    rng: &mut CaseRng,
    source: &Topology,
    target: &Topology,
    tries: usize,
) -> Option<PointMap> {
    (0..tries).find_map(|_| {
        let f = map(rng, source.carrier(), target.carrier());
        maps::is_continuous(&f, source, target)
            .unwrap_or(false)
            .then_some(f)
    })
}

/// Random term of depth at most `max_depth` over `arity` variables.
pub fn term(rng: &mut CaseRng, arity: usize, max_depth: usize) -> Term {
    if max_depth == 0 || rng.gen_bool(0.3) {
        return Term::var(rng.gen_range(0..arity));
    }
    let op = *TermOp::ALL.choose(rng).expect("nonempty");
    Term::node(op, term(rng, arity, max_depth - 1), term(rng, arity, max_depth - 1))
}

/// Random subfamily of the product's subbasic opens, given as
/// `(factor, α)`, whose lifts cover the product.
pub fn subbasic_cover(rng: &mut CaseRng, product: &ProductSpace) -> Vec<(usize, FuzzySet)> {
    let pool: Vec<(usize, FuzzySet)> = product
        .factors()
        .iter()
        .enumerate()
        .flat_map(|(i, f)| {
            f.opens()
                .iter()
                .filter(|o| !o.is_zero() && !o.is_one())
                .map(move |o| (i, o.clone()))
        })
        .collect();
    let covers = |pick: &[(usize, FuzzySet)]| {
        let lifted: Vec<FuzzySet> = pick
            .iter()
            .map(|(i, a)| product.lift(*i, a).expect("factor open"))
            .collect();
        let chain = product.chain();
        FuzzyFamily::from_unsorted(chain, product.carrier().len(), lifted)
            .join()
            .is_one()
    };
    for _ in 0..64 {
        let pick: Vec<(usize, FuzzySet)> = pool.iter().filter(|_| rng.gen_bool(0.6)).cloned().collect();
        if !pick.is_empty() && covers(&pick) {
            return pick;
        }
    }
    let mut pick: Vec<(usize, FuzzySet)> = pool.iter().filter(|_| rng.gen_bool(0.3)).cloned().collect();
    let j = rng.gen_range(0..product.factors().len());
    pick.push((j, FuzzySet::one(product.chain(), product.factors()[j].width())));
    pick
}
