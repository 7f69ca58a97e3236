//! Arithmetic of the finite Łukasiewicz chain Ł_n.

use crate::error::{Error, Result};

/// Binary operations of the pointwise MV-algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    /// Truncated addition.
    Oplus,
    /// Łukasiewicz product.
    Odot,
    Meet,
    Join,
}

impl BinOp {
    /// The operations a topology must be closed under besides joins.
    pub const TERM_OPS: [BinOp; 3] = [BinOp::Oplus, BinOp::Odot, BinOp::Meet];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Oplus => "⊕",
            BinOp::Odot => "⊙",
            BinOp::Meet => "∧",
            BinOp::Join => "∨",
        }
    }
}

/// The chain Ł_n = {0, 1/n, ..., 1}, element `k` standing for `k/n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    n: u8,
}

impl Chain {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > u8::MAX as u32 {
            return Err(Error::InvalidChain(n));
        }
        Ok(Chain { n: n as u8 })
    }

    #[inline]
    pub fn n(self) -> u8 {
        self.n
    }

    #[inline]
    pub fn top(self) -> u8 {
        self.n
    }

    #[inline]
    pub fn contains(self, value: u32) -> bool {
        value <= self.n as u32
    }

    pub fn check(self, value: u32) -> Result<u8> {
        if self.contains(value) {
            Ok(value as u8)
        } else {
            Err(Error::OutOfRange { value, n: self.n })
        }
    }

    /// All elements `0..=n` in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..=self.n
    }

    #[inline]
    pub fn oplus(self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        s.min(self.n as u16) as u8
    }

    #[inline]
    pub fn odot(self, a: u8, b: u8) -> u8 {
        (a as u16 + b as u16).saturating_sub(self.n as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        self.n - a
    }

    /// `k·a = a ⊕ ... ⊕ a` (k times); `0·a = 0`.
    #[inline]
    pub fn scale(self, k: u32, a: u8) -> u8 {
        (k.min(self.n as u32) * a as u32).min(self.n as u32) as u8
    }

    #[inline]
    pub fn apply(self, op: BinOp, a: u8, b: u8) -> u8 {
        debug_assert!(a <= self.n && b <= self.n);
        match op {
            BinOp::Oplus => self.oplus(a, b),
            BinOp::Odot => self.odot(a, b),
            BinOp::Meet => a.min(b),
            BinOp::Join => a.max(b),
        }
    }

    /// Range-checked form of [`Chain::apply`].
    pub fn checked(self, op: BinOp, a: u32, b: u32) -> Result<u8> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(self.apply(op, a, b))
    }

    pub fn checked_neg(self, a: u32) -> Result<u8> {
        Ok(self.neg(self.check(a)?))
    }

    /// Smallest `k ≥ 1` with `k·a = n`, or `None` for `a = 0`.
    pub fn saturating_multiplicity(self, a: u8) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some((self.n as u32).div_ceil(a as u32))
        }
    }
}
