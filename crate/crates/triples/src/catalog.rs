//! Named configurations and the small-configuration census.
//!
//! Atlas names are stable public identifiers. The D-series and the wicket
//! are produced by augmenting their defining patterns; C14 is pinned down
//! by enumeration as the member of the (7,4)-family that is neither the
//! Pasch configuration nor the sail.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::canon::{canonical_form, isomorphic, CanonicalForm};
use crate::error::{Error, Result};
use crate::patterns::{augment, parse_pattern, ColorId};
use crate::system::TripleSystem;

/// The i-cycle: blocks {0,1,2} + 2j (mod 2i) for j = 0..i-1.
pub fn i_cycle(i: usize) -> Result<TripleSystem> {
    if i < 3 {
        return Err(Error::Unsupported(format!("i-cycle needs i >= 3, got {i}")));
    }
    let n = 2 * i;
    let triples: Vec<[usize; 3]> =
        (0..i).map(|j| [(2 * j) % n, (2 * j + 1) % n, (2 * j + 2) % n]).collect();
    TripleSystem::from_triples(n, &triples)
}

/// Three pairwise intersecting blocks without a common point.
pub fn triangle() -> TripleSystem {
    i_cycle(3).expect("the triangle is well-formed")
}

/// The sail: a triangle plus a block through two of its degree-one points
/// and one fresh point.
pub fn sail() -> TripleSystem {
    TripleSystem::from_triples(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 0], [0, 3, 6]])
        .expect("the sail is well-formed")
}

/// The Pasch configuration: the unique 4-block configuration on 6 points.
pub fn pasch() -> TripleSystem {
    TripleSystem::from_triples(6, &[[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]])
        .expect("the Pasch configuration is well-formed")
}

/// Three rows and the first two columns of a 3x3 point matrix.
pub fn wicket() -> TripleSystem {
    crate::search::wicket_guest()
}

/// Three rows and all three columns of a 3x3 point matrix.
pub fn grid() -> TripleSystem {
    TripleSystem::from_triples(
        9,
        &[[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7], [2, 5, 8]],
    )
    .expect("the grid is well-formed")
}

/// D1: augmentation of the path pqrq with an extra p-edge at its midpoint.
pub fn d1() -> TripleSystem {
    let forest = parse_pattern("0 1 p; 1 2 q; 2 3 r; 3 4 q; 2 5 p").expect("valid pattern");
    augment(&forest, None).expect("the D1 pattern is a 3-pattern").system
}

/// D2: augmentation of the 2-pattern pqp,pq.
pub fn d2() -> TripleSystem {
    let forest = parse_pattern("pqp,pq").expect("valid pattern");
    augment(&forest, None).expect("the D2 pattern is a 2-pattern").system
}

/// D3: augmentation of the extended 2-pattern pqprq with bridge r.
pub fn d3() -> TripleSystem {
    let forest = parse_pattern("pqprq").expect("valid pattern");
    let r: ColorId = "r".parse().expect("valid color");
    augment(&forest, Some(r)).expect("pqprq is an extended 2-pattern").system
}

/// C14: the member of the (7,4)-family that is neither Pasch nor the sail,
/// obtained from the census rather than transcribed from a drawing.
pub fn c14() -> TripleSystem {
    static C14: OnceLock<TripleSystem> = OnceLock::new();
    C14.get_or_init(|| {
        let family: Vec<TripleSystem> = enumerate_configurations(4)
            .expect("4 is in range")
            .iter()
            .map(|c| c.to_system())
            .filter(|s| s.point_count() <= 7)
            .collect();
        assert_eq!(family.len(), 3, "the (7,4)-family has three members");
        family
            .into_iter()
            .find(|s| {
                !isomorphic(s, &pasch()).expect("comparable") && !isomorphic(s, &sail()).expect("comparable")
            })
            .expect("one member is neither Pasch nor the sail")
    })
    .clone()
}

/// Stable atlas identifiers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AtlasName {
    Triangle,
    Sail,
    Pasch,
    C14,
    D1,
    D2,
    D3,
    Wicket,
    Grid,
    FiveCycle,
    ICycle(usize),
}

impl FromStr for AtlasName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Ok(match lower.as_str() {
            "triangle" => AtlasName::Triangle,
            "sail" | "c15" => AtlasName::Sail,
            "pasch" | "c16" => AtlasName::Pasch,
            "c14" => AtlasName::C14,
            "d1" => AtlasName::D1,
            "d2" => AtlasName::D2,
            "d3" => AtlasName::D3,
            "wicket" | "d4" => AtlasName::Wicket,
            "grid" => AtlasName::Grid,
            "five_cycle" | "fivecycle" => AtlasName::FiveCycle,
            _ => {
                let inner = lower
                    .strip_prefix("i_cycle(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| lower.strip_prefix("i_cycle_"))
                    .ok_or_else(|| Error::UnknownAtlas(s.to_string()))?;
                let i: usize =
                    inner.parse().map_err(|_| Error::UnknownAtlas(s.to_string()))?;
                AtlasName::ICycle(i)
            }
        })
    }
}

/// Builds the named configuration.
pub fn atlas(name: AtlasName) -> Result<TripleSystem> {
    Ok(match name {
        AtlasName::Triangle => triangle(),
        AtlasName::Sail => sail(),
        AtlasName::Pasch => pasch(),
        AtlasName::C14 => c14(),
        AtlasName::D1 => d1(),
        AtlasName::D2 => d2(),
        AtlasName::D3 => d3(),
        AtlasName::Wicket => wicket(),
        AtlasName::Grid => grid(),
        AtlasName::FiveCycle => i_cycle(5)?,
        AtlasName::ICycle(i) => i_cycle(i)?,
    })
}

pub fn atlas_by_name(name: &str) -> Result<TripleSystem> {
    atlas(name.parse()?)
}

/// Names accepted by [`atlas_by_name`], for help output.
pub const ATLAS_NAMES: &[&str] = &[
    "triangle", "sail", "pasch", "c14", "c15", "c16", "d1", "d2", "d3", "d4", "wicket", "grid",
    "five_cycle", "i_cycle(N)",
];

/// All non-isomorphic linear configurations with exactly `b` blocks (every
/// point in at least one block), built by incremental block addition with
/// canonical-form dedup. Supported for b = 1..=5.
pub fn enumerate_configurations(b: usize) -> Result<Vec<CanonicalForm>> {
    if !(1..=5).contains(&b) {
        return Err(Error::BlockCountRange(b));
    }
    let seed = TripleSystem::from_triples(3, &[[0, 1, 2]]).expect("single block");
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&seed)?);
    for _ in 1..b {
        let mut next = BTreeSet::new();
        for rep in &level {
            let sys = rep.to_system();
            for ext in extensions(&sys) {
                next.insert(canonical_form(&ext)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Every way to add one block to a configuration while keeping it linear:
/// pick 0..=3 existing points covering no already-covered pair, fill the
/// rest with fresh points.
fn extensions(sys: &TripleSystem) -> Vec<TripleSystem> {
    let n = sys.point_count();
    let covered: BTreeSet<(usize, usize)> =
        sys.blocks().iter().flat_map(|b| b.pairs()).collect();
    let uncovered =
        |a: usize, b: usize| !covered.contains(&(a.min(b), a.max(b)));
    let mut out = Vec::new();
    let mut push = |existing: &[usize]| {
        let mut pts = existing.to_vec();
        let mut fresh = n;
        while pts.len() < 3 {
            pts.push(fresh);
            fresh += 1;
        }
        let mut blocks: Vec<[usize; 3]> = sys.blocks().iter().map(|b| b.points()).collect();
        blocks.push([pts[0], pts[1], pts[2]]);
        out.push(
            TripleSystem::from_triples(fresh.max(n), &blocks)
                .expect("extension is well-formed"),
        );
    };
    push(&[]);
    for a in 0..n {
        push(&[a]);
        for b in a + 1..n {
            if !uncovered(a, b) {
                continue;
            }
            push(&[a, b]);
            for c in b + 1..n {
                if uncovered(a, c) && uncovered(b, c) {
                    push(&[a, b, c]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::patterns::{augment, parse_pattern};

    #[test]
    fn atlas_examples() {
        let s = sail();
        assert_eq!(s.point_count(), 7);
        assert_eq!(s.block_count(), 4);

        let w = wicket();
        assert_eq!(w.point_count(), 9);
        assert_eq!(w.block_count(), 5);
        let from_pattern =
            augment(&parse_pattern("abcab").unwrap(), Some("c".parse().unwrap())).unwrap();
        assert!(isomorphic(&w, &from_pattern.system).unwrap());

        let ic3 = i_cycle(3).unwrap();
        assert_eq!(
            ic3.blocks().iter().map(|b| b.points()).collect::<Vec<_>>(),
            vec![[0, 1, 2], [0, 4, 5], [2, 3, 4]]
        );
        assert!(isomorphic(&ic3, &triangle()).unwrap());
    }

    #[test]
    fn wicket_from_its_other_pattern() {
        // pqrpq with bridge r is the same extended pattern as abcab.
        let from_pqrpq =
            augment(&parse_pattern("pqrpq").unwrap(), Some("r".parse().unwrap())).unwrap();
        assert!(isomorphic(&wicket(), &from_pqrpq.system).unwrap());
    }

    #[test]
    fn d_series_shapes() {
        for (sys, pts, blocks) in
            [(d1(), 9, 5), (d2(), 9, 5), (d3(), 9, 5), (grid(), 9, 6)]
        {
            assert_eq!(sys.point_count(), pts);
            assert_eq!(sys.block_count(), blocks);
            assert!(sys.is_linear());
        }
        // D3 also arises from the plain 3-pattern abcba.
        let via_abcba = augment(&parse_pattern("abcba").unwrap(), None).unwrap();
        assert!(isomorphic(&d3(), &via_abcba.system).unwrap());
        assert!(!isomorphic(&d3(), &wicket()).unwrap());
    }

    #[test]
    fn census_counts() {
        assert_eq!(enumerate_configurations(1).unwrap().len(), 1);
        assert_eq!(enumerate_configurations(2).unwrap().len(), 2);
        assert_eq!(enumerate_configurations(3).unwrap().len(), 5);
        assert_eq!(enumerate_configurations(4).unwrap().len(), 16);
        assert!(enumerate_configurations(0).is_err());
        assert!(enumerate_configurations(6).is_err());
    }

    #[test]
    fn four_block_family_facts() {
        let classes = enumerate_configurations(4).unwrap();
        // Exactly one 6-point configuration: Pasch.
        let six: Vec<_> =
            classes.iter().filter(|c| c.point_count() == 6).collect();
        assert_eq!(six.len(), 1);
        assert!(isomorphic(&six[0].to_system(), &pasch()).unwrap());
        // The (7,4)-family (at most 7 points) has exactly three members.
        let family: Vec<_> =
            classes.iter().filter(|c| c.point_count() <= 7).collect();
        assert_eq!(family.len(), 3);
    }

    #[test]
    fn c14_is_the_third_member() {
        let c = c14();
        assert_eq!(c.point_count(), 7);
        assert_eq!(c.block_count(), 4);
        assert!(!isomorphic(&c, &pasch()).unwrap());
        assert!(!isomorphic(&c, &sail()).unwrap());
        // Cross-check against the direct construction: a triangle plus a
        // block through two of its degree-one points and a fresh point.
        let direct =
            TripleSystem::from_triples(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 0], [1, 3, 6]])
                .unwrap();
        assert!(isomorphic(&c, &direct).unwrap());
    }

    #[test]
    fn atlas_name_parsing() {
        assert_eq!("wicket".parse::<AtlasName>().unwrap(), AtlasName::Wicket);
        assert_eq!("D4".parse::<AtlasName>().unwrap(), AtlasName::Wicket);
        assert_eq!("c15".parse::<AtlasName>().unwrap(), AtlasName::Sail);
        assert_eq!("i_cycle(4)".parse::<AtlasName>().unwrap(), AtlasName::ICycle(4));
        assert!("mystery".parse::<AtlasName>().is_err());
        assert!(atlas(AtlasName::ICycle(2)).is_err());
    }
}
