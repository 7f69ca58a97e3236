//! Finite products of MV-topological spaces.

use std::sync::OnceLock;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::fuzzy::{Carrier, FuzzyFamily, FuzzySet, PointMap};
use crate::maps;
use crate::topology::{self, SeparatingPair, Settings, Topology};

/// The product of a list of spaces over a common chain.
///
/// Points are tuples in lexicographic order of factor indices (the first
/// factor varies slowest). The canonical subbase `{α ∘ π_i}` is built
/// eagerly; the full topology is materialized on first request.
#[derive(Debug)]
pub struct ProductSpace {
    factors: Vec<Topology>,
    carrier: Carrier,
    projections: Vec<PointMap>,
    subbase: FuzzyFamily,
    topology: OnceLock<Topology>,
}

impl ProductSpace {
    pub fn new(factors: Vec<Topology>, settings: &Settings) -> Result<Self> {
        let Some(first) = factors.first() else {
            return Err(Error::invalid("a product needs at least one factor"));
        };
        let chain = first.chain();
        if let Some(bad) = factors.iter().position(|f| f.chain() != chain) {
            return Err(Error::mismatch(format!(
                "factor {bad} lives on Ł_{} but factor 0 on Ł_{}",
                factors[bad].chain().n(),
                chain.n()
            )));
        }
        let size = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.width()))
            .filter(|&s| s <= settings.max_opens)
            .ok_or(Error::Resource {
                what: "product points",
                cap: settings.max_opens as u64,
                size: factors.iter().map(|f| f.width() as u64).product(),
            })?;

        let sizes: Vec<usize> = factors.iter().map(Topology::width).collect();
        let tuples: Vec<Vec<usize>> = (0..size).map(|p| decode(p, &sizes)).collect();
        let labels = tuples.iter().map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .zip(&factors)
                .map(|(&c, f)| f.carrier().label(c))
                .collect();
            format!("({})", parts.join(","))
        });
        let carrier = Carrier::new(labels)?;
        let projections = factors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                PointMap::new(
                    carrier.clone(),
                    f.carrier().clone(),
                    tuples.iter().map(|t| t[i]).collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let subbase = FuzzyFamily::from_unsorted(
            chain,
            size,
            factors
                .iter()
                .zip(&projections)
                .flat_map(|(f, pi)| f.opens().iter().map(move |o| pi.preimage_unchecked(o)))
                .collect(),
        );
        Ok(ProductSpace {
            factors,
            carrier,
            projections,
            subbase,
            topology: OnceLock::new(),
        })
    }

    pub fn factors(&self) -> &[Topology] {
        &self.factors
    }

    pub fn chain(&self) -> Chain {
        self.factors[0].chain()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn projections(&self) -> &[PointMap] {
        &self.projections
    }

    /// `{α ∘ π_i : α open in factor i}`.
    pub fn subbase(&self) -> &FuzzyFamily {
        &self.subbase
    }

    pub fn base(&self, settings: &Settings) -> Result<FuzzyFamily> {
        topology::base_from_subbase(&self.subbase, settings)
    }

    /// The product topology, generated once and cached.
    pub fn topology(&self, settings: &Settings) -> Result<&Topology> {
        if let Some(t) = self.topology.get() {
            return Ok(t);
        }
        let t = topology::generate_from_subbase(&self.carrier, &self.subbase, settings)?;
        Ok(self.topology.get_or_init(|| t))
    }

    pub fn is_materialized(&self) -> bool {
        self.topology.get().is_some()
    }

    /// Coordinates of a product point.
    pub fn coordinates(&self, point: usize) -> Vec<usize> {
        self.projections.iter().map(|p| p.apply(point)).collect()
    }

    /// Product point with the given coordinates.
    pub fn point(&self, coordinates: &[usize]) -> Option<usize> {
        if coordinates.len() != self.factors.len() {
            return None;
        }
        coordinates
            .iter()
            .zip(&self.factors)
            .try_fold(0usize, |acc, (&c, f)| (c < f.width()).then(|| acc * f.width() + c))
    }

    /// Separates two product points with `o_x ∘ π_j`, `o_y ∘ π_j` built from
    /// a separating pair in the first factor where they differ.
    pub fn lifted_separation(&self, x: usize, y: usize) -> Option<SeparatingPair> {
        let (cx, cy) = (self.coordinates(x), self.coordinates(y));
        let j = (0..self.factors.len()).find(|&j| cx[j] != cy[j])?;
        let local = topology::separate(&self.factors[j], cx[j], cy[j])?;
        let pi = &self.projections[j];
        Some(SeparatingPair {
            x,
            y,
            around_x: pi.preimage_unchecked(&local.around_x),
            around_y: pi.preimage_unchecked(&local.around_y),
        })
    }

    /// Lifts an open of factor `i` to the product.
    pub fn lift(&self, factor: usize, set: &FuzzySet) -> Result<FuzzySet> {
        let pi = self
            .projections
            .get(factor)
            .ok_or_else(|| Error::invalid(format!("no factor {factor}")))?;
        pi.preimage(set)
    }
}

fn decode(mut p: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for i in (0..sizes.len()).rev() {
        out[i] = p % sizes[i];
        p /= sizes[i];
    }
    out
}

/// The map `y ↦ (f_i(y))_i` into the product.
pub fn tupling(maps: &[PointMap], product: &ProductSpace) -> Result<PointMap> {
    if maps.len() != product.factors.len() {
        return Err(Error::mismatch(format!(
            "{} maps for {} factors",
            maps.len(),
            product.factors.len()
        )));
    }
    let domain = maps[0].domain().clone();
    for (i, (f, factor)) in maps.iter().zip(&product.factors).enumerate() {
        if *f.domain() != domain {
            return Err(Error::mismatch(format!("map {i} has a different domain")));
        }
        if f.codomain() != factor.carrier() {
            return Err(Error::mismatch(format!("map {i} does not land in factor {i}")));
        }
    }
    let images = (0..domain.len())
        .map(|y| {
            let coords: Vec<usize> = maps.iter().map(|f| f.apply(y)).collect();
            product.point(&coords).expect("coordinates in range")
        })
        .collect();
    PointMap::new(domain, product.carrier.clone(), images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalReport {
    pub tupling: PointMap,
    /// Preimages of all subbasic opens are open in the source.
    pub continuous: bool,
    /// `π_i ∘ f = f_i` for every factor.
    pub commutes: bool,
    /// At every source point exactly one product point has the prescribed
    /// coordinates, so any `g` with `π_i ∘ g = f_i` equals `f`.
    pub unique: bool,
}

impl UniversalReport {
    pub fn holds(&self) -> bool {
        self.continuous && self.commutes && self.unique
    }
}

/// Checks the universal property of the product for continuous maps `f_i`
/// out of `source`.
pub fn verify_universal_property(
    product: &ProductSpace,
    source: &Topology,
    maps: &[PointMap],
) -> Result<UniversalReport> {
    for (i, (f, factor)) in maps.iter().zip(&product.factors).enumerate() {
        if !maps::is_continuous(f, source, factor)? {
            return Err(Error::Precondition(format!("map {i} is not continuous")));
        }
    }
    let f = tupling(maps, product)?;
    let continuous = maps::is_continuous_via_base(&f, source, &product.subbase)?;
    let commutes = product
        .projections
        .iter()
        .zip(maps)
        .all(|(pi, fi)| f.then(pi).map(|g| g == *fi).unwrap_or(false));
    let unique = (0..source.width()).all(|y| {
        let matching: Vec<usize> = (0..product.carrier.len())
            .filter(|&p| product.projections.iter().zip(maps).all(|(pi, fi)| pi.apply(p) == fi.apply(y)))
            .collect();
        matching == [f.apply(y)]
    });
    Ok(UniversalReport {
        tupling: f,
        continuous,
        commutes,
        unique,
    })
}
