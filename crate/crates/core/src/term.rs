//! Terms over {⊕, ⊙, ∧} and witness extraction through ideals.

use std::fmt;

use thiserror::Error;

use crate::chain::BinOp;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyFamily, FuzzySet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermOp {
    Oplus,
    Odot,
    Meet,
}

impl TermOp {
    pub const ALL: [TermOp; 3] = [TermOp::Oplus, TermOp::Odot, TermOp::Meet];

    pub fn as_binop(self) -> BinOp {
        match self {
            TermOp::Oplus => BinOp::Oplus,
            TermOp::Odot => BinOp::Odot,
            TermOp::Meet => BinOp::Meet,
        }
    }
}

/// Expression tree with variable leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Node(TermOp, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn node(op: TermOp, left: Term, right: Term) -> Term {
        Term::Node(op, Box::new(left), Box::new(right))
    }

    pub fn oplus(left: Term, right: Term) -> Term {
        Term::node(TermOp::Oplus, left, right)
    }

    pub fn odot(left: Term, right: Term) -> Term {
        Term::node(TermOp::Odot, left, right)
    }

    pub fn meet(left: Term, right: Term) -> Term {
        Term::node(TermOp::Meet, left, right)
    }

    /// Node count.
    pub fn len(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Node(_, l, r) => 1 + l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Node(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Smallest argument count the term accepts.
    pub fn arity(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Node(_, l, r) => l.arity().max(r.arity()),
        }
    }

    /// Variable indices in left-to-right leaf order, deduplicated.
    pub fn variables(&self) -> Vec<usize> {
        fn walk(t: &Term, out: &mut Vec<usize>) {
            match t {
                Term::Var(i) => {
                    if !out.contains(i) {
                        out.push(*i)
                    }
                }
                Term::Node(_, l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    fn check_args(&self, args: &[FuzzySet]) -> Result<()> {
        if args.len() < self.arity() {
            return Err(Error::mismatch(format!(
                "term needs {} arguments, got {}",
                self.arity(),
                args.len()
            )));
        }
        for a in &args[1..] {
            a.same_shape(&args[0])?;
        }
        Ok(())
    }

    /// Pointwise evaluation.
    pub fn eval(&self, args: &[FuzzySet]) -> Result<FuzzySet> {
        self.check_args(args)?;
        Ok(self.eval_unchecked(args))
    }

    fn eval_unchecked(&self, args: &[FuzzySet]) -> FuzzySet {
        match self {
            Term::Var(i) => args[*i].clone(),
            Term::Node(op, l, r) => l
                .eval_unchecked(args)
                .combine_unchecked(op.as_binop(), &r.eval_unchecked(args)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "v{i}"),
            Term::Node(op, l, r) => write!(f, "({l} {} {r})", op.as_binop().symbol()),
        }
    }
}

/// Why [`term_witness`] could not produce an index.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("arguments do not fit the term: {0}")]
    Arguments(String),
    #[error("the family is not an ideal")]
    NotIdeal,
    #[error("the term value is not in the ideal")]
    ValueOutsideIdeal,
    #[error("the term value vanishes at the point")]
    ValueVanishes,
    #[error("at subterm {subterm} neither operand value lies in the ideal")]
    NotPrime { subterm: String },
}

/// Finds `j` with `args[j] ∈ M` and `args[j](a) > 0`, given that the term
/// value is in the ideal `M` and positive at `a`.
///
/// Descends the term: under ∧ and ⊙ both operands are positive at `a` and
/// the walk enters the first operand whose value is in `M`; under ⊕ both
/// operands are in `M` by downward closure and the walk enters the first
/// one positive at `a`. The ∧/⊙ step needs one operand in `M`, which an
/// arbitrary ideal does not guarantee; [`WitnessError::NotPrime`] reports
/// where it fails.
pub fn term_witness(
    term: &Term,
    args: &[FuzzySet],
    point: usize,
    ideal: &FuzzyFamily,
) -> std::result::Result<usize, WitnessError> {
    term.check_args(args)
        .map_err(|e| WitnessError::Arguments(e.to_string()))?;
    if args[0].width() != ideal.width() || args[0].chain() != ideal.chain() {
        return Err(WitnessError::Arguments("ideal lives on another shape".into()));
    }
    if point >= ideal.width() {
        return Err(WitnessError::Arguments(format!("no point {point}")));
    }
    if !ideal.is_ideal() {
        return Err(WitnessError::NotIdeal);
    }
    let value = term.eval_unchecked(args);
    if !ideal.contains(&value) {
        return Err(WitnessError::ValueOutsideIdeal);
    }
    if value.get(point) == 0 {
        return Err(WitnessError::ValueVanishes);
    }
    let j = descend(term, args, point, ideal)?;
    assert!(
        ideal.contains(&args[j]) && args[j].get(point) > 0,
        "witness postcondition"
    );
    Ok(j)
}

fn descend(
    term: &Term,
    args: &[FuzzySet],
    point: usize,
    ideal: &FuzzyFamily,
) -> std::result::Result<usize, WitnessError> {
    match term {
        Term::Var(j) => Ok(*j),
        Term::Node(op, l, r) => {
            let (lv, rv) = (l.eval_unchecked(args), r.eval_unchecked(args));
            let next = match op {
                TermOp::Meet | TermOp::Odot => {
                    debug_assert!(lv.get(point) > 0 && rv.get(point) > 0);
                    if ideal.contains(&lv) {
                        l
                    } else if ideal.contains(&rv) {
                        r
                    } else {
                        return Err(WitnessError::NotPrime {
                            subterm: term.to_string(),
                        });
                    }
                }
                TermOp::Oplus => {
                    debug_assert!(ideal.contains(&lv) && ideal.contains(&rv));
                    if lv.get(point) > 0 {
                        l
                    } else {
                        r
                    }
                }
            };
            descend(next, args, point, ideal)
        }
    }
}

/// Every ∧/⊙ subterm whose value lies in `M` has an operand value in `M`.
pub fn prime_along(term: &Term, args: &[FuzzySet], ideal: &FuzzyFamily) -> bool {
    match term {
        Term::Var(_) => true,
        Term::Node(op, l, r) => {
            let local = match op {
                TermOp::Oplus => true,
                TermOp::Odot | TermOp::Meet => {
                    !ideal.contains(&term.eval_unchecked(args))
                        || ideal.contains(&l.eval_unchecked(args))
                        || ideal.contains(&r.eval_unchecked(args))
                }
            };
            local && prime_along(l, args, ideal) && prime_along(r, args, ideal)
        }
    }
}
