//! Continuity and morphism predicates between finite MV-spaces.

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyFamily, FuzzySet, PointMap};
use crate::topology::Topology;

fn check_ends(f: &PointMap, source: &Topology, target: &Topology) -> Result<()> {
    if f.domain() != source.carrier() {
        return Err(Error::mismatch("map domain differs from the source carrier"));
    }
    if f.codomain() != target.carrier() {
        return Err(Error::mismatch("map codomain differs from the target carrier"));
    }
    if source.chain() != target.chain() {
        return Err(Error::mismatch(format!(
            "spaces over Ł_{} and Ł_{}",
            source.chain().n(),
            target.chain().n()
        )));
    }
    Ok(())
}

/// First open of the target (canonical order) whose preimage is not open.
pub fn continuity_violation(
    f: &PointMap,
    source: &Topology,
    target: &Topology,
) -> Result<Option<FuzzySet>> {
    check_ends(f, source, target)?;
    Ok(first_bad_preimage(f, source, target.opens()))
}

fn first_bad_preimage(f: &PointMap, source: &Topology, family: &FuzzyFamily) -> Option<FuzzySet> {
    family
        .iter()
        .find(|o| !source.is_open(&f.preimage_unchecked(o)))
        .cloned()
}

pub fn is_continuous(f: &PointMap, source: &Topology, target: &Topology) -> Result<bool> {
    Ok(continuity_violation(f, source, target)?.is_none())
}

/// Continuity tested only on a base (or subbase) of the target topology.
pub fn is_continuous_via_base(f: &PointMap, source: &Topology, base: &FuzzyFamily) -> Result<bool> {
    if f.domain() != source.carrier() {
        return Err(Error::mismatch("map domain differs from the source carrier"));
    }
    if base.width() != f.codomain().len() || base.chain() != source.chain() {
        return Err(Error::mismatch("base does not live on the codomain"));
    }
    Ok(first_bad_preimage(f, source, base).is_none())
}

/// Sup-images of opens are open.
pub fn is_open_map(f: &PointMap, source: &Topology, target: &Topology) -> Result<bool> {
    check_ends(f, source, target)?;
    source
        .opens()
        .iter()
        .map(|o| f.forward_image(o).map(|img| target.is_open(&img)))
        .try_fold(true, |acc, ok| Ok(acc && ok?))
}

/// Sup-images of closed sets are closed.
pub fn is_closed_map(f: &PointMap, source: &Topology, target: &Topology) -> Result<bool> {
    check_ends(f, source, target)?;
    for c in source.closed_sets().iter() {
        if !target.is_closed(&f.forward_image(c)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bijective with `f` and `f⁻¹` continuous.
pub fn is_homeomorphism(f: &PointMap, source: &Topology, target: &Topology) -> Result<bool> {
    check_ends(f, source, target)?;
    let Some(inv) = f.inverse() else {
        return Ok(false);
    };
    Ok(is_continuous(f, source, target)? && is_continuous(&inv, target, source)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;
    use crate::fuzzy::Carrier;

    fn ch(n: u32) -> Chain {
        Chain::new(n).unwrap()
    }

    #[test]
    fn identity_is_everything() {
        let c = Carrier::new(["a", "b"]).unwrap();
        let t = Topology::discrete_crisp(c.clone(), ch(1));
        let id = PointMap::identity(&c);
        assert!(is_continuous(&id, &t, &t).unwrap());
        assert!(is_open_map(&id, &t, &t).unwrap());
        assert!(is_closed_map(&id, &t, &t).unwrap());
        assert!(is_homeomorphism(&id, &t, &t).unwrap());
        assert!(is_continuous_via_base(&id, &t, t.opens()).unwrap());
    }

    #[test]
    fn indiscrete_targets_and_sources() {
        let c = Carrier::new(["a", "b"]).unwrap();
        let ind = Topology::indiscrete(c.clone(), ch(1));
        let disc = Topology::discrete_crisp(c.clone(), ch(1));
        let swap = PointMap::new(c.clone(), c.clone(), vec![1, 0]).unwrap();
        assert!(is_continuous(&swap, &disc, &ind).unwrap());

        let id = PointMap::identity(&c);
        let bad = continuity_violation(&id, &ind, &disc).unwrap();
        assert_eq!(bad.unwrap().values(), &[0, 1]);
        assert!(!is_homeomorphism(&id, &ind, &disc).unwrap());
        assert!(!is_homeomorphism(&id, &disc, &ind).unwrap());
        assert!(is_continuous(&id, &disc, &ind).unwrap());

        let top = FuzzyFamily::new(ch(1), 2, [FuzzySet::one(ch(1), 2)]).unwrap();
        assert!(is_continuous_via_base(&id, &ind, &top).unwrap());
    }

    #[test]
    fn constant_map_into_indiscrete_point_is_open() {
        let two = Carrier::new(["a", "b"]).unwrap();
        let one = Carrier::new(["p"]).unwrap();
        let disc = Topology::discrete_crisp(two.clone(), ch(1));
        let point = Topology::indiscrete(one.clone(), ch(1));
        let f = PointMap::constant(&two, &one, 0).unwrap();
        assert_eq!(
            f.forward_image(&FuzzySet::crisp(ch(1), 2, &[0])).unwrap().values(),
            &[1]
        );
        assert!(is_open_map(&f, &disc, &point).unwrap());
        assert!(is_continuous(&f, &disc, &point).unwrap());
    }

    #[test]
    fn mismatched_ends_error() {
        let two = Carrier::new(["a", "b"]).unwrap();
        let other = Carrier::new(["c", "d"]).unwrap();
        let t = Topology::indiscrete(two.clone(), ch(1));
        let u = Topology::indiscrete(other.clone(), ch(1));
        let id = PointMap::identity(&two);
        assert!(is_continuous(&id, &t, &u).is_err());
        let t2 = Topology::indiscrete(two.clone(), ch(2));
        assert!(is_continuous(&id, &t, &t2).is_err());
    }
}
