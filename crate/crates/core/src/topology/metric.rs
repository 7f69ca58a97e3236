//! Topologies induced by a metric through fuzzy open balls.

use num_rational::Ratio;

use super::{generate_from_subbase, is_large_subbase, Settings, Topology};
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::fuzzy::{Carrier, FuzzyFamily, FuzzySet};

pub type Distance = Ratio<u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricInstance {
    carrier: Carrier,
    chain: Chain,
    dist: Vec<Vec<Distance>>,
}

/// A fuzzy point: positive value at a single support point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzyPoint {
    pub support: usize,
    pub value: u8,
}

#[derive(Clone, Debug)]
pub struct MetricTopology {
    pub balls: FuzzyFamily,
    /// Whether the ball family is closed under all multiples.
    pub balls_large: bool,
    pub topology: Topology,
}

impl MetricInstance {
    /// Validates symmetry, zero diagonal and the triangle inequality.
    pub fn new(carrier: Carrier, chain: Chain, dist: Vec<Vec<Distance>>) -> Result<Self> {
        let w = carrier.len();
        if dist.len() != w || dist.iter().any(|row| row.len() != w) {
            return Err(Error::invalid(format!("distance matrix must be {w}x{w}")));
        }
        for x in 0..w {
            if dist[x][x] != Distance::from_integer(0) {
                return Err(Error::invalid(format!("d({x},{x}) is not zero")));
            }
            for y in 0..w {
                if dist[x][y] != dist[y][x] {
                    return Err(Error::invalid(format!("d({x},{y}) != d({y},{x})")));
                }
                for z in 0..w {
                    if dist[x][z] > dist[x][y] + dist[y][z] {
                        return Err(Error::invalid(format!(
                            "triangle inequality fails for ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(MetricInstance {
            carrier,
            chain,
            dist,
        })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn distance(&self, x: usize, y: usize) -> Distance {
        self.dist[x][y]
    }

    pub fn diameter(&self) -> Distance {
        self.dist
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or_else(|| Distance::from_integer(0))
    }

    /// Open ball: the center value on `{y : d(x,y) < r}`, zero elsewhere.
    pub fn ball(&self, center: FuzzyPoint, radius: Distance) -> Result<FuzzySet> {
        if center.support >= self.carrier.len() {
            return Err(Error::invalid(format!("no point {}", center.support)));
        }
        if center.value == 0 || center.value > self.chain.n() {
            return Err(Error::invalid(format!(
                "fuzzy point value {} outside 1..={}",
                center.value,
                self.chain.n()
            )));
        }
        if radius == Distance::from_integer(0) {
            return Err(Error::invalid("radius must be positive"));
        }
        let values = self.dist[center.support]
            .iter()
            .map(|&d| if d < radius { center.value } else { 0 })
            .collect();
        Ok(FuzzySet::from_vec(self.chain, values))
    }

    /// Every fuzzy point with every positive value.
    pub fn default_centers(&self) -> Vec<FuzzyPoint> {
        (0..self.carrier.len())
            .flat_map(|support| (1..=self.chain.n()).map(move |value| FuzzyPoint { support, value }))
            .collect()
    }

    /// Distinct positive distances plus one radius beyond the diameter.
    ///
    /// Any other radius yields a ball already produced by one of these.
    pub fn default_radii(&self) -> Vec<Distance> {
        let mut radii: Vec<Distance> = self
            .dist
            .iter()
            .flatten()
            .copied()
            .filter(|d| *d > Distance::from_integer(0))
            .collect();
        radii.push(self.diameter() + Distance::from_integer(1));
        radii.sort();
        radii.dedup();
        radii
    }

    pub fn ball_family(&self, centers: &[FuzzyPoint], radii: &[Distance]) -> Result<FuzzyFamily> {
        let mut balls = Vec::with_capacity(centers.len() * radii.len());
        for &c in centers {
            for &r in radii {
                balls.push(self.ball(c, r)?);
            }
        }
        FuzzyFamily::new(self.chain, self.carrier.len(), balls)
    }

    /// The MV-topology generated by the balls. `None` selects the defaults.
    pub fn induced(
        &self,
        centers: Option<&[FuzzyPoint]>,
        radii: Option<&[Distance]>,
        settings: &Settings,
    ) -> Result<MetricTopology> {
        let default_centers;
        let centers = match centers {
            Some(c) => c,
            None => {
                default_centers = self.default_centers();
                &default_centers
            }
        };
        let default_radii;
        let radii = match radii {
            Some(r) => r,
            None => {
                default_radii = self.default_radii();
                &default_radii
            }
        };
        let balls = self.ball_family(centers, radii)?;
        let topology = generate_from_subbase(&self.carrier, &balls, settings)?;
        Ok(MetricTopology {
            balls_large: is_large_subbase(&balls),
            balls,
            topology,
        })
    }
}
