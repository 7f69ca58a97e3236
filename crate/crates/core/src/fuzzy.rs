//! Fuzzy sets over a finite carrier and the pointwise MV-algebra `Ł_n^X`.

use std::fmt;
use std::sync::Arc;

use crate::chain::{BinOp, Chain};
use crate::error::{Error, Result};

/// An ordered list of distinct point labels. Index order is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Carrier {
    labels: Arc<[String]>,
}

impl Carrier {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::invalid("carrier must have at least one point"));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate point label {:?}", w[0])));
        }
        Ok(Carrier {
            labels: labels.into(),
        })
    }

    /// Carrier labelled `"0"`, `"1"`, ... .
    pub fn indexed(size: usize) -> Result<Self> {
        Self::new((0..size).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A map `X → Ł_n`, stored as one chain element per point.
///
/// Ordering is lexicographic on the value vector, which is the canonical
/// order used by every [`FuzzyFamily`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzySet {
    chain: Chain,
    values: Box<[u8]>,
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.values[..])
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FuzzySet {
    pub fn new<I>(chain: Chain, values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<u32>,
    {
        let values = values
            .into_iter()
            .map(|v| chain.check(v.into()))
            .collect::<Result<Vec<u8>>>()?;
        if values.is_empty() {
            return Err(Error::invalid("fuzzy set over an empty carrier"));
        }
        Ok(FuzzySet {
            chain,
            values: values.into(),
        })
    }

    pub(crate) fn from_vec(chain: Chain, values: Vec<u8>) -> Self {
        debug_assert!(values.iter().all(|&v| v <= chain.n()));
        FuzzySet {
            chain,
            values: values.into(),
        }
    }

    pub fn constant(chain: Chain, width: usize, value: u8) -> Self {
        Self::from_vec(chain, vec![value.min(chain.n()); width])
    }

    /// The bottom element 𝟎.
    pub fn zero(chain: Chain, width: usize) -> Self {
        Self::constant(chain, width, 0)
    }

    /// The top element 𝟏.
    pub fn one(chain: Chain, width: usize) -> Self {
        Self::constant(chain, width, chain.n())
    }

    /// Crisp characteristic function of `points`.
    pub fn crisp(chain: Chain, width: usize, points: &[usize]) -> Self {
        let mut v = vec![0; width];
        for &p in points {
            v[p] = chain.n();
        }
        Self::from_vec(chain, v)
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn width(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    #[inline]
    pub fn get(&self, point: usize) -> u8 {
        self.values[point]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_one(&self) -> bool {
        self.values.iter().all(|&v| v == self.chain.n())
    }

    pub fn is_crisp(&self) -> bool {
        self.values.iter().all(|&v| v == 0 || v == self.chain.n())
    }

    /// Pointwise order.
    pub fn leq(&self, other: &FuzzySet) -> bool {
        self.values
            .iter()
            .zip(other.values.iter())
            .all(|(a, b)| a <= b)
    }

    /// Indices of points with positive value.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, _)| i)
    }

    pub(crate) fn same_shape(&self, other: &FuzzySet) -> Result<()> {
        if self.chain != other.chain {
            return Err(Error::mismatch(format!(
                "chains Ł_{} and Ł_{}",
                self.chain.n(),
                other.chain.n()
            )));
        }
        if self.width() != other.width() {
            return Err(Error::mismatch(format!(
                "carriers of size {} and {}",
                self.width(),
                other.width()
            )));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn combine_unchecked(&self, op: BinOp, other: &FuzzySet) -> FuzzySet {
        let chain = self.chain;
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(&a, &b)| chain.apply(op, a, b))
            .collect();
        FuzzySet { chain, values }
    }

    /// Applies `op` pointwise.
    pub fn combine(&self, op: BinOp, other: &FuzzySet) -> Result<FuzzySet> {
        self.same_shape(other)?;
        Ok(self.combine_unchecked(op, other))
    }

    pub fn oplus(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.combine(BinOp::Oplus, other)
    }

    pub fn odot(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.combine(BinOp::Odot, other)
    }

    pub fn meet(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.combine(BinOp::Meet, other)
    }

    pub fn join(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.combine(BinOp::Join, other)
    }

    /// Pointwise complement `α*`.
    pub fn complement(&self) -> FuzzySet {
        let chain = self.chain;
        FuzzySet {
            chain,
            values: self.values.iter().map(|&a| chain.neg(a)).collect(),
        }
    }

    /// `k·α`; `0·α = 𝟎` and `k ≥ n` gives the crisp support.
    pub fn scale(&self, k: u32) -> FuzzySet {
        let chain = self.chain;
        FuzzySet {
            chain,
            values: self.values.iter().map(|&a| chain.scale(k, a)).collect(),
        }
    }
}

/// A canonical (sorted, duplicate-free) family of fuzzy sets sharing one
/// chain and one carrier size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FuzzyFamily {
    chain: Chain,
    width: usize,
    members: Vec<FuzzySet>,
}

impl FuzzyFamily {
    pub fn new<I>(chain: Chain, width: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = FuzzySet>,
    {
        let members: Vec<FuzzySet> = members.into_iter().collect();
        for m in &members {
            if m.chain() != chain || m.width() != width {
                return Err(Error::mismatch(format!(
                    "member {m} does not live on Ł_{}^{width}",
                    chain.n()
                )));
            }
        }
        Ok(Self::from_unsorted(chain, width, members))
    }

    pub(crate) fn from_unsorted(chain: Chain, width: usize, mut members: Vec<FuzzySet>) -> Self {
        members.sort_unstable();
        members.dedup();
        FuzzyFamily {
            chain,
            width,
            members,
        }
    }

    pub fn empty(chain: Chain, width: usize) -> Self {
        FuzzyFamily {
            chain,
            width,
            members: Vec::new(),
        }
    }

    /// Every fuzzy set on a carrier of `width` points; `(n+1)^width` members.
    pub fn all(chain: Chain, width: usize) -> Self {
        let n = chain.n();
        let mut members = Vec::new();
        let mut cur = vec![0u8; width];
        loop {
            members.push(FuzzySet::from_vec(chain, cur.clone()));
            let mut i = width;
            loop {
                if i == 0 {
                    return FuzzyFamily {
                        chain,
                        width,
                        members,
                    };
                }
                i -= 1;
                if cur[i] < n {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn members(&self) -> &[FuzzySet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FuzzySet> {
        self.members.iter()
    }

    pub fn contains(&self, set: &FuzzySet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    pub fn position(&self, set: &FuzzySet) -> Option<usize> {
        self.members.binary_search(set).ok()
    }

    pub fn is_subset_of(&self, other: &FuzzyFamily) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    pub(crate) fn check_shape(&self, set: &FuzzySet) -> Result<()> {
        if set.chain() != self.chain || set.width() != self.width {
            return Err(Error::mismatch(format!(
                "{set} does not live on Ł_{}^{}",
                self.chain.n(),
                self.width
            )));
        }
        Ok(())
    }

    pub(crate) fn same_shape(&self, other: &FuzzyFamily) -> Result<()> {
        if self.chain != other.chain || self.width != other.width {
            return Err(Error::mismatch(format!(
                "families over Ł_{}^{} and Ł_{}^{}",
                self.chain.n(),
                self.width,
                other.chain.n(),
                other.width
            )));
        }
        Ok(())
    }

    /// Union with another family on the same shape.
    pub fn union(&self, other: &FuzzyFamily) -> Result<FuzzyFamily> {
        self.same_shape(other)?;
        let mut all = self.members.clone();
        all.extend(other.members.iter().cloned());
        Ok(Self::from_unsorted(self.chain, self.width, all))
    }

    /// Adds one set, keeping the family canonical.
    pub fn with(&self, set: FuzzySet) -> Result<FuzzyFamily> {
        self.check_shape(&set)?;
        let mut all = self.members.clone();
        all.push(set);
        Ok(Self::from_unsorted(self.chain, self.width, all))
    }

    /// Pointwise supremum; the empty join is 𝟎.
    pub fn join(&self) -> FuzzySet {
        let mut acc = vec![0u8; self.width];
        for m in &self.members {
            for (a, &v) in acc.iter_mut().zip(m.values()) {
                *a = (*a).max(v);
            }
        }
        FuzzySet::from_vec(self.chain, acc)
    }

    /// Pointwise infimum; the empty meet is 𝟏.
    pub fn meet(&self) -> FuzzySet {
        let mut acc = vec![self.chain.n(); self.width];
        for m in &self.members {
            for (a, &v) in acc.iter_mut().zip(m.values()) {
                *a = (*a).min(v);
            }
        }
        FuzzySet::from_vec(self.chain, acc)
    }

    /// `{α* : α ∈ F}`.
    pub fn complements(&self) -> FuzzyFamily {
        Self::from_unsorted(
            self.chain,
            self.width,
            self.members.iter().map(FuzzySet::complement).collect(),
        )
    }

    pub fn intersection(&self, other: &FuzzyFamily) -> FuzzyFamily {
        FuzzyFamily {
            chain: self.chain,
            width: self.width,
            members: self
                .members
                .iter()
                .filter(|m| other.contains(m))
                .cloned()
                .collect(),
        }
    }

    /// Ideal of the MV-algebra: nonempty, downward closed, ⊕-closed.
    ///
    /// Downward closure is checked through single-step decrements, which
    /// generate the whole down-set.
    pub fn is_ideal(&self) -> bool {
        if self.members.is_empty() {
            return false;
        }
        let down_closed = self.members.iter().all(|m| {
            (0..self.width).all(|x| {
                m.get(x) == 0 || {
                    let mut v = m.values().to_vec();
                    v[x] -= 1;
                    self.contains(&FuzzySet::from_vec(self.chain, v))
                }
            })
        });
        down_closed && self.closed_under(BinOp::Oplus)
    }

    /// Filter of the MV-algebra: nonempty, upward closed, ⊙-closed.
    pub fn is_filter(&self) -> bool {
        if self.members.is_empty() {
            return false;
        }
        let n = self.chain.n();
        let up_closed = self.members.iter().all(|m| {
            (0..self.width).all(|x| {
                m.get(x) == n || {
                    let mut v = m.values().to_vec();
                    v[x] += 1;
                    self.contains(&FuzzySet::from_vec(self.chain, v))
                }
            })
        });
        up_closed && self.closed_under(BinOp::Odot)
    }

    /// Closure of the family under a binary operation (pairs and self-pairs).
    pub fn closed_under(&self, op: BinOp) -> bool {
        self.members.iter().enumerate().all(|(i, a)| {
            self.members[i..]
                .iter()
                .all(|b| self.contains(&a.combine_unchecked(op, b)))
        })
    }

    /// The ideal `{α : α(x) = 0 for every x outside zone}`.
    ///
    /// Over a finite carrier every ideal of `Ł_n^X` has this form.
    pub fn ideal_on(chain: Chain, width: usize, zone: &[usize]) -> FuzzyFamily {
        let all = FuzzyFamily::all(chain, width);
        let members = all
            .members
            .into_iter()
            .filter(|m| m.support().all(|x| zone.contains(&x)))
            .collect();
        FuzzyFamily {
            chain,
            width,
            members,
        }
    }
}

impl<'a> IntoIterator for &'a FuzzyFamily {
    type Item = &'a FuzzySet;
    type IntoIter = std::slice::Iter<'a, FuzzySet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// A function between finite carriers, stored as codomain indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointMap {
    domain: Carrier,
    codomain: Carrier,
    images: Vec<usize>,
}

impl PointMap {
    pub fn new(domain: Carrier, codomain: Carrier, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain.len() {
            return Err(Error::mismatch(format!(
                "map lists {} images for a domain of {} points",
                images.len(),
                domain.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= codomain.len()) {
            return Err(Error::invalid(format!(
                "image index {bad} outside codomain of {} points",
                codomain.len()
            )));
        }
        Ok(PointMap {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(carrier: &Carrier) -> Self {
        PointMap {
            domain: carrier.clone(),
            codomain: carrier.clone(),
            images: (0..carrier.len()).collect(),
        }
    }

    pub fn constant(domain: &Carrier, codomain: &Carrier, target: usize) -> Result<Self> {
        Self::new(domain.clone(), codomain.clone(), vec![target; domain.len()])
    }

    pub fn domain(&self) -> &Carrier {
        &self.domain
    }

    pub fn codomain(&self) -> &Carrier {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &PointMap) -> Result<PointMap> {
        if self.codomain != then.domain {
            return Err(Error::mismatch("composition of maps with unequal middle carrier"));
        }
        Ok(PointMap {
            domain: self.domain.clone(),
            codomain: then.codomain.clone(),
            images: self.images.iter().map(|&y| then.images[y]).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        if self.domain.len() != self.codomain.len() {
            return false;
        }
        let mut seen = vec![false; self.codomain.len()];
        self.images
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// Inverse map, when bijective.
    pub fn inverse(&self) -> Option<PointMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(PointMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            images: inv,
        })
    }

    /// MV-preimage `α ↦ α ∘ f`.
    pub fn preimage(&self, alpha: &FuzzySet) -> Result<FuzzySet> {
        if alpha.width() != self.codomain.len() {
            return Err(Error::mismatch(format!(
                "preimage of a set on {} points along a map into {} points",
                alpha.width(),
                self.codomain.len()
            )));
        }
        Ok(self.preimage_unchecked(alpha))
    }

    pub(crate) fn preimage_unchecked(&self, alpha: &FuzzySet) -> FuzzySet {
        FuzzySet::from_vec(
            alpha.chain(),
            self.images.iter().map(|&y| alpha.get(y)).collect(),
        )
    }

    /// Preimage of every member.
    pub fn preimage_family(&self, family: &FuzzyFamily) -> Result<FuzzyFamily> {
        if family.width() != self.codomain.len() {
            return Err(Error::mismatch("family does not live on the codomain"));
        }
        Ok(FuzzyFamily::from_unsorted(
            family.chain(),
            self.domain.len(),
            family.iter().map(|a| self.preimage_unchecked(a)).collect(),
        ))
    }

    /// Sup-image: `f→(α)(y) = max{α(x) : f(x) = y}`, 0 on empty fibers.
    pub fn forward_image(&self, alpha: &FuzzySet) -> Result<FuzzySet> {
        if alpha.width() != self.domain.len() {
            return Err(Error::mismatch(format!(
                "image of a set on {} points along a map from {} points",
                alpha.width(),
                self.domain.len()
            )));
        }
        let mut out = vec![0u8; self.codomain.len()];
        for (x, &y) in self.images.iter().enumerate() {
            out[y] = out[y].max(alpha.get(x));
        }
        Ok(FuzzySet::from_vec(alpha.chain(), out))
    }
}
