//! Seeded randomized suites that check the theorems on small spaces.
//!
//! Case `i` of a run draws from its own ChaCha stream, so results do not
//! depend on scheduling; outcomes are aggregated by case index.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::chain::{BinOp, Chain};
use crate::covers::{self, CompactnessMode};
use crate::error::Error;
use crate::fuzzy::{Carrier, FuzzyFamily, FuzzySet, PointMap};
use crate::gen::{self, CaseRng, SpaceBounds};
use crate::maps;
use crate::oracle;
use crate::par::Exec;
use crate::product::ProductSpace;
use crate::term::{self, Term};
use crate::topology::{self, Settings, Topology};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    Generation,
    Continuity,
    Tychonoff,
    HausdorffProduct,
    ZerodimProduct,
    StoneProduct,
    AlexanderClaims,
    Lemma1,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Algebra,
        Suite::Generation,
        Suite::Continuity,
        Suite::Tychonoff,
        Suite::HausdorffProduct,
        Suite::ZerodimProduct,
        Suite::StoneProduct,
        Suite::AlexanderClaims,
        Suite::Lemma1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Generation => "generation",
            Suite::Continuity => "continuity",
            Suite::Tychonoff => "tychonoff",
            Suite::HausdorffProduct => "hausdorff-product",
            Suite::ZerodimProduct => "zerodim-product",
            Suite::StoneProduct => "stone-product",
            Suite::AlexanderClaims => "alexander-claims",
            Suite::Lemma1 => "lemma1",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Result of one randomized case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// `size` orders failures for reporting the smallest one.
    Fail { size: usize, detail: String },
    /// The drawn instance fell outside the hypotheses (or was a deliberate
    /// contract probe answered with a precondition error).
    Rejected(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub cases: u64,
    pub passed: u64,
    pub failed: u64,
    pub rejected: u64,
    pub first_failure: Option<(u64, String)>,
    pub smallest_failure: Option<(u64, usize, String)>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "cases: {}", self.cases)?;
        writeln!(f, "passed: {}", self.passed)?;
        writeln!(f, "failed: {}", self.failed)?;
        writeln!(f, "rejected: {}", self.rejected)?;
        match &self.first_failure {
            Some((i, d)) => writeln!(f, "first failure: case {i}: {d}")?,
            None => writeln!(f, "first failure: none")?,
        }
        if let Some((i, size, d)) = &self.smallest_failure {
            writeln!(f, "smallest failure: case {i} (size {size}): {d}")?;
        }
        writeln!(f, "verdict: {}", if self.all_passed() { "pass" } else { "fail" })
    }
}

pub fn run_suite(suite: Suite, seed: u64, cases: u64, settings: &Settings) -> SuiteReport {
    let inner = Settings {
        exec: Exec::Sequential,
        ..*settings
    };
    let outcomes = settings
        .exec
        .map_range(cases as usize, |i| run_case(suite, seed, i as u64, &inner));
    let mut report = SuiteReport {
        suite,
        seed,
        cases,
        passed: 0,
        failed: 0,
        rejected: 0,
        first_failure: None,
        smallest_failure: None,
    };
    for (i, outcome) in outcomes.into_iter().enumerate() {
        let i = i as u64;
        match outcome {
            Outcome::Pass => report.passed += 1,
            Outcome::Rejected(_) => report.rejected += 1,
            Outcome::Fail { size, detail } => {
                report.failed += 1;
                if report.first_failure.is_none() {
                    report.first_failure = Some((i, detail.clone()));
                }
                if report.smallest_failure.as_ref().is_none_or(|(_, s, _)| size < *s) {
                    report.smallest_failure = Some((i, size, detail));
                }
            }
        }
    }
    report
}

pub fn run_case(suite: Suite, seed: u64, index: u64, settings: &Settings) -> Outcome {
    let mut rng = gen::case_rng(seed, index);
    let result = match suite {
        Suite::Algebra => algebra_case(&mut rng),
        Suite::Generation => generation_case(&mut rng, settings),
        Suite::Continuity => continuity_case(&mut rng, settings),
        Suite::Tychonoff => tychonoff_case(&mut rng, settings),
        Suite::HausdorffProduct => preservation_case(&mut rng, settings, Preserved::Hausdorff),
        Suite::ZerodimProduct => preservation_case(&mut rng, settings, Preserved::ZeroDimensional),
        Suite::StoneProduct => preservation_case(&mut rng, settings, Preserved::Stone),
        Suite::AlexanderClaims => alexander_case(&mut rng),
        Suite::Lemma1 => lemma1_case(&mut rng, index, settings),
    };
    result.unwrap_or_else(|e| Outcome::Fail {
        size: usize::MAX,
        detail: format!("error: {e}"),
    })
}

type CaseResult = Result<Outcome, Error>;

macro_rules! check {
    ($cond:expr, $size:expr, $($fmt:tt)+) => {
        if !$cond {
            return Ok(Outcome::Fail { size: $size, detail: format!($($fmt)+) });
        }
    };
}

/// First violated MV-algebra identity (or inequality) on a triple, if any.
pub fn scalar_violation(ch: Chain, a: u8, b: u8, c: u8) -> Option<&'static str> {
    let (p, m, neg) = (|x, y| ch.oplus(x, y), |x, y| ch.odot(x, y), |x| ch.neg(x));
    let checks: [(&str, bool); 11] = [
        ("⊕ commutative", p(a, b) == p(b, a)),
        ("⊕ associative", p(p(a, b), c) == p(a, p(b, c))),
        ("𝟎 is the ⊕ unit", p(a, 0) == a),
        ("𝟎* absorbs", p(a, neg(0)) == neg(0)),
        ("involution", neg(neg(a)) == a),
        ("Łukasiewicz axiom", p(neg(p(neg(a), b)), b) == p(neg(p(neg(b), a)), a)),
        ("⊙ is dual to ⊕", m(a, b) == neg(p(neg(a), neg(b)))),
        ("∧ from ⊙ and ⊕", a.min(b) == m(a, p(neg(a), b))),
        ("∨ from ⊙ and ⊕", a.max(b) == p(m(a, neg(b)), b)),
        ("a⊙(b⊕c) ≤ b⊕(a⊙c)", m(a, p(b, c)) <= p(b, m(a, c))),
        ("⊙ associative", m(m(a, b), c) == m(a, m(b, c))),
    ];
    checks.iter().find(|(_, ok)| !ok).map(|(name, _)| *name)
}

fn algebra_case(rng: &mut CaseRng) -> CaseResult {
    let ch = gen::chain(rng, 8);
    let [a, b, c] = [0; 3].map(|_| rng.gen_range(0..=ch.n()));
    if let Some(name) = scalar_violation(ch, a, b, c) {
        check!(false, 1, "{name} fails on Ł_{} at ({a},{b},{c})", ch.n());
    }
    let w = rng.gen_range(1..=4);
    let [x, y, z] = [0; 3].map(|_| gen::set(rng, ch, w));
    for p in 0..w {
        let got = x.oplus(&y)?.oplus(&z)?.get(p);
        let want = ch.oplus(ch.oplus(x.get(p), y.get(p)), z.get(p));
        check!(got == want, w, "pointwise ⊕ differs at point {p} for {x},{y},{z}");
    }
    let lhs = x.odot(&y.oplus(&z)?)?;
    let rhs = y.oplus(&x.odot(&z)?)?;
    check!(lhs.leq(&rhs), w, "a⊙(b⊕c) ≤ b⊕(a⊙c) fails for {x},{y},{z}");
    check!(x.complement().complement() == x, w, "involution fails on {x}");
    for k in 0..=(2 * ch.n() as u32) {
        let mut acc = FuzzySet::zero(ch, w);
        for _ in 0..k {
            acc = acc.oplus(&x)?;
        }
        check!(x.scale(k) == acc, w, "{k}·{x} differs from repeated ⊕");
    }
    // preimages are MV-homomorphisms
    let v = rng.gen_range(1..=4);
    let f = gen::map(rng, &Carrier::indexed(v)?, &Carrier::indexed(w)?);
    for op in [BinOp::Oplus, BinOp::Odot, BinOp::Meet, BinOp::Join] {
        let lhs = f.preimage(&x.combine(op, &y)?)?;
        let rhs = f.preimage(&x)?.combine(op, &f.preimage(&y)?)?;
        check!(lhs == rhs, v + w, "preimage does not preserve {}", op.symbol());
    }
    check!(
        f.preimage(&x.complement())? == f.preimage(&x)?.complement(),
        v + w,
        "preimage does not preserve complement"
    );
    Ok(Outcome::Pass)
}

fn closed_under(family: &FuzzyFamily, ops: &[BinOp]) -> Option<String> {
    for a in family {
        for b in family {
            for &op in ops {
                let c = a.combine(op, b).ok()?;
                if !family.contains(&c) {
                    return Some(format!("{a} {} {b} = {c}", op.symbol()));
                }
            }
        }
    }
    None
}

fn generation_case(rng: &mut CaseRng, settings: &Settings) -> CaseResult {
    let ch = gen::chain(rng, 2);
    let w = rng.gen_range(1..=3);
    let k = rng.gen_range(0..=3);
    let s = gen::family(rng, ch, w, k);
    let carrier = Carrier::indexed(w)?;
    let t = topology::generate_from_subbase(&carrier, &s, settings)?;
    let size = t.opens().len();
    let naive = oracle::naive_topology(&s);
    let got: Vec<Vec<u8>> = t.opens().iter().map(|o| o.values().to_vec()).collect();
    check!(got == naive, size, "generated opens differ from the naive closure for subbase {s:?}");
    check!(topology::is_topology(t.opens()), size, "generated family is not a topology");
    check!(s.is_subset_of(t.opens()), size, "subbase not contained in the opens");
    check!(topology::is_subbase(&s, &t, settings)?, size, "subbase check fails");
    let again = topology::generate_from_subbase(&carrier, t.opens(), settings)?;
    check!(again == t, size, "generation is not idempotent on {s:?}");

    let base = topology::base_from_subbase(&s, settings)?;
    check!(topology::base_from_subbase(&base, settings)? == base, size, "base closure not idempotent");
    let bigger = s.with(gen::set(rng, ch, w))?;
    check!(
        base.is_subset_of(&topology::base_from_subbase(&bigger, settings)?),
        size,
        "base closure not monotone"
    );
    let closed = t.closed_sets();
    if let Some(bad) = closed_under(&closed, &[BinOp::Oplus, BinOp::Odot, BinOp::Meet, BinOp::Join]) {
        check!(false, size, "closed sets not closed: {bad}");
    }
    if let Some(bad) = closed_under(&t.clopens(), &[BinOp::Oplus, BinOp::Odot, BinOp::Meet]) {
        check!(false, size, "clopens not closed: {bad}");
    }
    Ok(Outcome::Pass)
}

fn continuity_case(rng: &mut CaseRng, settings: &Settings) -> CaseResult {
    let ch = gen::chain(rng, 2);
    let bounds = SpaceBounds {
        max_points: 3,
        max_n: 2,
        max_subbase: 3,
        max_opens: 40,
    };
    let x = gen::space_on(rng, ch, bounds, settings);
    let y = gen::space_on(rng, ch, bounds, settings);
    let z = gen::space_on(rng, ch, bounds, settings);
    let size = x.opens().len() + y.opens().len();
    let f = gen::map(rng, x.carrier(), y.carrier());
    let cont = maps::is_continuous(&f, &x, &y)?;

    let base_y = topology::base_from_subbase(y.opens(), settings)?;
    check!(
        maps::is_continuous_via_base(&f, &x, &base_y)? == cont,
        size,
        "base criterion disagrees on the opens of Y"
    );
    let k = rng.gen_range(0..=3);
    let theta = gen::family(rng, ch, y.width(), k);
    let generated = topology::generate_from_subbase(y.carrier(), &theta, settings)?;
    let theta_base = topology::base_from_subbase(&theta, settings)?
        .with(FuzzySet::one(ch, y.width()))?;
    check!(topology::is_base(&theta_base, &generated), size, "closure of Θ is not a base");
    check!(
        maps::is_continuous_via_base(&f, &x, &theta_base)?
            == maps::is_continuous(&f, &x, &generated)?,
        size,
        "base criterion disagrees for Θ = {theta:?}"
    );
    check!(
        maps::is_continuous_via_base(&f, &x, &theta)? == maps::is_continuous(&f, &x, &generated)?,
        size,
        "subbase criterion disagrees for Θ = {theta:?}"
    );

    let g = gen::map(rng, y.carrier(), z.carrier());
    if cont && maps::is_continuous(&g, &y, &z)? {
        check!(
            maps::is_continuous(&f.then(&g)?, &x, &z)?,
            size,
            "composite of continuous maps is not continuous"
        );
    }

    // bijections: open ⇔ inverse continuous
    let mut perm: Vec<usize> = (0..y.width()).collect();
    rand::seq::SliceRandom::shuffle(&mut perm[..], rng);
    let k = rng.gen_range(0..=3);
    let twin_subbase = gen::family(rng, ch, y.width(), k);
    let twin_carrier = Carrier::new((0..y.width()).map(|i| format!("t{i}")))?;
    let twin = topology::generate_from_subbase(&twin_carrier, &twin_subbase, settings)?;
    let b = PointMap::new(y.carrier().clone(), twin.carrier().clone(), perm)?;
    let inv = b.inverse().expect("permutation");
    check!(
        maps::is_open_map(&b, &y, &twin)? == maps::is_continuous(&inv, &twin, &y)?,
        size,
        "open bijection criterion fails"
    );
    Ok(Outcome::Pass)
}

fn small_pair(rng: &mut CaseRng, settings: &Settings) -> (Topology, Topology) {
    let ch = gen::chain(rng, 2);
    (
        gen::space_on(rng, ch, SpaceBounds::SMALL, settings),
        gen::space_on(rng, ch, SpaceBounds::SMALL, settings),
    )
}

/// Factors oracle-compact, product oracle-compact, and every sampled
/// subbasic cover yields a valid single-factor certificate.
pub fn tychonoff_check(
    rng: &mut CaseRng,
    factors: Vec<Topology>,
    covers_per_product: usize,
    settings: &Settings,
) -> CaseResult {
    for (i, f) in factors.iter().enumerate() {
        let r = covers::is_compact(f, CompactnessMode::Oracle, settings)?;
        check!(r.compact, f.opens().len(), "factor {i} is not compact");
    }
    let product = ProductSpace::new(factors, settings)?;
    let pt = product.topology(settings)?;
    let size = pt.opens().len();
    let r = covers::is_compact(pt, CompactnessMode::Oracle, settings)?;
    check!(r.compact, size, "product is not compact: {:?}", r.counterexample);
    check!(r.covers_checked > 0, size, "oracle examined no covers");
    for _ in 0..covers_per_product {
        let gamma = gen::subbasic_cover(rng, &product);
        let out = covers::product_subbasic_subcover(&product, &gamma)?;
        check!(
            covers::is_additive_cover(&out.certificate),
            size,
            "extracted certificate does not sum to 𝟏"
        );
        let lifted: Vec<FuzzySet> = gamma
            .iter()
            .filter(|(i, _)| *i == out.factor)
            .map(|(i, a)| product.lift(*i, a))
            .collect::<Result<_, _>>()?;
        check!(
            out.certificate.entries().iter().all(|(s, _)| lifted.contains(s)),
            size,
            "certificate uses sets outside factor {}",
            out.factor
        );
    }
    Ok(Outcome::Pass)
}

fn tychonoff_case(rng: &mut CaseRng, settings: &Settings) -> CaseResult {
    let (a, b) = small_pair(rng, settings);
    tychonoff_check(rng, vec![a, b], 20, settings)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preserved {
    Hausdorff,
    ZeroDimensional,
    Stone,
}

impl Preserved {
    pub fn holds(self, t: &Topology, settings: &Settings) -> Result<bool, Error> {
        Ok(match self {
            Preserved::Hausdorff => t.is_hausdorff(),
            Preserved::ZeroDimensional => t.is_zero_dimensional(),
            Preserved::Stone => t.is_stone(CompactnessMode::Oracle, settings)?,
        })
    }

    /// A random factor in the hypothesis class, or `None` after `tries`.
    pub fn draw(self, rng: &mut CaseRng, chain: Chain, settings: &Settings, tries: usize) -> Option<Topology> {
        (0..tries).find_map(|_| {
            // one-point factors make the product check trivial
            let w = if rng.gen_bool(0.75) { 2 } else { 1 };
            let t = match self {
                Preserved::Hausdorff => gen::hausdorff_space(rng, chain, w, settings),
                Preserved::ZeroDimensional => gen::zero_dimensional_space(rng, chain, w, settings),
                Preserved::Stone => gen::stone_space(rng, chain, w, settings),
            }?;
            self.holds(&t, settings).ok()?.then_some(t)
        })
    }
}

/// The product of two factors satisfying `property` satisfies it too; for
/// Hausdorff, the lifted separating pairs are checked directly.
pub fn preservation_check(
    property: Preserved,
    a: Topology,
    b: Topology,
    settings: &Settings,
) -> CaseResult {
    let product = ProductSpace::new(vec![a, b], settings)?;
    let pt = product.topology(settings)?;
    let size = pt.opens().len();
    check!(property.holds(pt, settings)?, size, "product loses {property:?}");
    if property != Preserved::ZeroDimensional {
        let n = pt.chain().n();
        for x in 0..pt.width() {
            for y in x + 1..pt.width() {
                let Some(sep) = product.lifted_separation(x, y) else {
                    check!(false, size, "no lifted separation for ({x},{y})");
                    unreachable!()
                };
                check!(
                    sep.around_x.get(x) == n
                        && sep.around_y.get(y) == n
                        && sep.around_x.meet(&sep.around_y)?.is_zero()
                        && pt.is_open(&sep.around_x)
                        && pt.is_open(&sep.around_y),
                    size,
                    "lifted separation for ({x},{y}) is invalid"
                );
            }
        }
    }
    Ok(Outcome::Pass)
}

fn preservation_case(rng: &mut CaseRng, settings: &Settings, property: Preserved) -> CaseResult {
    let ch = gen::chain(rng, 2);
    let (Some(a), Some(b)) = (
        property.draw(rng, ch, settings, 32),
        property.draw(rng, ch, settings, 32),
    ) else {
        return Ok(Outcome::Rejected("no factor in the hypothesis class".into()));
    };
    preservation_check(property, a, b, settings)
}

/// A drawn instance of the term-witness problem.
#[derive(Clone, Debug)]
pub struct WitnessInstance {
    pub term: Term,
    pub args: Vec<FuzzySet>,
    pub point: usize,
    pub ideal: FuzzyFamily,
}

/// Draws until the term is compound, its value lies in the ideal, is positive at the point,
/// and every ∧/⊙ subterm valued in the ideal has an operand there.
pub fn witness_instance(rng: &mut CaseRng, tries: usize) -> Option<WitnessInstance> {
    for _ in 0..tries {
        let ch = gen::chain(rng, 3);
        let w = rng.gen_range(1..=3);
        let zone: Vec<usize> = (0..w).filter(|_| rng.gen_bool(0.6)).collect();
        let ideal = FuzzyFamily::ideal_on(ch, w, &zone);
        let arity = rng.gen_range(1..=4);
        let args: Vec<FuzzySet> = (0..arity)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    ideal.members()[rng.gen_range(0..ideal.len())].clone()
                } else {
                    gen::set(rng, ch, w)
                }
            })
            .collect();
        let t = gen::term(rng, arity, 5);
        if t.depth() == 0 {
            continue;
        }
        let point = rng.gen_range(0..w);
        let value = t.eval(&args).ok()?;
        if ideal.contains(&value) && value.get(point) > 0 && term::prime_along(&t, &args, &ideal) {
            return Some(WitnessInstance {
                term: t,
                args,
                point,
                ideal,
            });
        }
    }
    None
}

/// The descent returns a brute-force-confirmed witness.
pub fn witness_check(inst: &WitnessInstance) -> Result<(), String> {
    let candidates = oracle::witness_indices(&inst.args, &inst.term.variables(), inst.point, &inst.ideal);
    match term::term_witness(&inst.term, &inst.args, inst.point, &inst.ideal) {
        Ok(j) if candidates.contains(&j) => Ok(()),
        Ok(j) => Err(format!("{} returned {j}, not a witness", inst.term)),
        Err(e) if candidates.is_empty() => Err(format!("{} failed ({e}) and no witness exists", inst.term)),
        Err(e) => Err(format!("{} failed ({e}) though {candidates:?} are witnesses", inst.term)),
    }
}

fn alexander_case(rng: &mut CaseRng) -> CaseResult {
    let Some(inst) = witness_instance(rng, 400) else {
        return Ok(Outcome::Rejected("no witness instance drawn".into()));
    };
    let size = inst.term.len();
    if let Err(e) = witness_check(&inst) {
        check!(false, size, "{e}");
    }

    let ch = gen::chain(rng, 3);
    let n = ch.n();
    let w = rng.gen_range(1..=3);
    // α_i ⊕ β = 𝟏 for all i
    let beta = gen::set(rng, ch, w);
    let k = rng.gen_range(1..=3);
    let alphas: Vec<FuzzySet> = (0..k)
        .map(|_| {
            FuzzySet::from_vec(
                ch,
                beta.values().iter().map(|&b| rng.gen_range(n - b..=n)).collect(),
            )
        })
        .collect();
    let fold = |op: BinOp| {
        alphas[1..]
            .iter()
            .try_fold(alphas[0].clone(), |acc, a| acc.combine(op, a))
    };
    check!(
        fold(BinOp::Odot)?.oplus(&beta.scale(k as u32))?.is_one(),
        w,
        "⊙ of {alphas:?} ⊕ {k}·{beta} is not 𝟏"
    );
    check!(fold(BinOp::Meet)?.oplus(&beta)?.is_one(), w, "∧ of {alphas:?} ⊕ {beta} is not 𝟏");
    check!(fold(BinOp::Oplus)?.oplus(&beta)?.is_one(), w, "⊕ of {alphas:?} ⊕ {beta} is not 𝟏");
    // α ⊕ γ = 𝟏 and α ≤ β imply β ⊕ γ = 𝟏
    let upper = FuzzySet::from_vec(
        ch,
        alphas[0].values().iter().map(|&a| rng.gen_range(a..=n)).collect(),
    );
    check!(upper.oplus(&beta)?.is_one(), w, "upward closure of co-covers fails");
    // ideals over a finite carrier are down-closed and ⊕-closed
    let zone: Vec<usize> = (0..w).filter(|_| rng.gen_bool(0.5)).collect();
    let ideal = FuzzyFamily::ideal_on(ch, w, &zone);
    check!(ideal.is_ideal(), w, "ideal on {zone:?} rejected");
    Ok(Outcome::Pass)
}

fn lemma1_case(rng: &mut CaseRng, index: u64, settings: &Settings) -> CaseResult {
    let ch = gen::chain(rng, 3);
    let bounds = SpaceBounds {
        max_points: 3,
        max_n: 3,
        max_subbase: 2,
        max_opens: 12,
    };
    let k = rng.gen_range(1..=3);
    let factors: Vec<Topology> = (0..k).map(|_| gen::space_on(rng, ch, bounds, settings)).collect();
    let product = ProductSpace::new(factors, settings)?;
    let size = product.subbase().len();
    if index % 10 == 9 {
        // contract probe: drop every open touching a chosen point per factor
        let gamma: Vec<(usize, FuzzySet)> = product
            .factors()
            .iter()
            .enumerate()
            .flat_map(|(i, f)| {
                let a = rng.gen_range(0..f.width());
                f.opens()
                    .iter()
                    .filter(move |o| o.get(a) == 0 && !o.is_zero())
                    .map(move |o| (i, o.clone()))
                    .collect::<Vec<_>>()
            })
            .collect();
        return match covers::product_subbasic_subcover(&product, &gamma) {
            Err(Error::Precondition(msg)) => Ok(Outcome::Rejected(msg)),
            Err(e) => Err(e),
            Ok(_) => Ok(Outcome::Fail {
                size,
                detail: "non-cover accepted".into(),
            }),
        };
    }
    let gamma = gen::subbasic_cover(rng, &product);
    let out = covers::product_subbasic_subcover(&product, &gamma)?;
    check!(covers::is_additive_cover(&out.certificate), size, "certificate does not sum to 𝟏");
    let covered_by = |i: usize| {
        (0..product.factors()[i].width())
            .all(|x| gamma.iter().any(|(f, a)| *f == i && a.get(x) > 0))
    };
    check!(covered_by(out.factor), size, "factor {} does not satisfy the support condition", out.factor);
    check!(
        (0..out.factor).all(|i| !covered_by(i)),
        size,
        "an earlier factor already satisfies the support condition"
    );
    Ok(Outcome::Pass)
}
