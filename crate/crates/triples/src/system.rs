//! Triple systems: the universal host/guest object.
//!
//! A [`TripleSystem`] is a point count together with a duplicate-free list of
//! 3-element blocks. It covers everything from full Steiner triple systems
//! down to small configurations (partial systems in which every point lies in
//! at least one block). Linearity (any two blocks share at most one point) is
//! a queried property, not a construction invariant, so rejected candidates
//! and counterexamples can be represented too.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Points are dense 0-based indices into the owning system.
pub type Point = usize;

/// An unordered triple of distinct points, stored ascending.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block([Point; 3]);

impl Block {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if a == b || b == c || a == c {
            return Err(Error::RepeatedPoint(a, b, c));
        }
        let mut pts = [a, b, c];
        pts.sort_unstable();
        Ok(Block(pts))
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    /// The three unordered pairs inside the block, each as (low, high).
    pub fn pairs(&self) -> [(Point, Point); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    /// The remaining point when `x` and `y` are both in the block.
    pub fn third(&self, x: Point, y: Point) -> Option<Point> {
        if !self.contains(x) || !self.contains(y) || x == y {
            return None;
        }
        self.0.iter().copied().find(|&p| p != x && p != y)
    }

    pub fn intersection_size(&self, other: &Block) -> usize {
        self.0.iter().filter(|p| other.contains(**p)).count()
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0[0], self.0[1], self.0[2])
    }
}

/// `n` points and a sorted, duplicate-free block list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TripleSystem {
    n: usize,
    blocks: Vec<Block>,
}

impl TripleSystem {
    /// Builds a structurally valid system: every block in range, no two
    /// blocks equal. The block list is sorted on ingestion.
    pub fn new(n: usize, mut blocks: Vec<Block>) -> Result<Self> {
        for b in &blocks {
            let [x, y, z] = b.points();
            if z >= n {
                return Err(Error::PointOutOfRange(x, y, z, n));
            }
        }
        blocks.sort_unstable();
        for w in blocks.windows(2) {
            if w[0] == w[1] {
                let [x, y, z] = w[0].points();
                return Err(Error::DuplicateBlock(x, y, z));
            }
        }
        Ok(TripleSystem { n, blocks })
    }

    pub fn from_triples(n: usize, triples: &[[Point; 3]]) -> Result<Self> {
        let blocks = triples
            .iter()
            .map(|t| Block::new(t[0], t[1], t[2]))
            .collect::<Result<Vec<_>>>()?;
        TripleSystem::new(n, blocks)
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn degree(&self, p: Point) -> usize {
        self.blocks.iter().filter(|b| b.contains(p)).count()
    }

    /// Degree of every point, indexed by point id.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for b in &self.blocks {
            for p in b.points() {
                deg[p] += 1;
            }
        }
        deg
    }

    /// True iff every pair of points lies in at most one block.
    pub fn is_linear(&self) -> bool {
        self.first_doubled_pair().is_none()
    }

    /// Errs with the offending pair when the system is not linear.
    pub fn require_linear(&self) -> Result<()> {
        match self.first_doubled_pair() {
            None => Ok(()),
            Some((x, y)) => Err(Error::NotLinear(x, y)),
        }
    }

    fn first_doubled_pair(&self) -> Option<(Point, Point)> {
        let mut seen = std::collections::HashSet::new();
        for b in &self.blocks {
            for pair in b.pairs() {
                if !seen.insert(pair) {
                    return Some(pair);
                }
            }
        }
        None
    }

    /// True iff every unordered pair of points is covered exactly once.
    /// Implies `block_count == n(n-1)/6`.
    pub fn is_steiner(&self) -> bool {
        if self.n * self.n.saturating_sub(1) / 6 != self.blocks.len() {
            return false;
        }
        if !self.is_linear() {
            return false;
        }
        // Linear + full pair count means every pair is covered exactly once.
        3 * self.blocks.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Configuration mode: every point lies in at least one block.
    pub fn is_configuration(&self) -> bool {
        self.degrees().iter().all(|&d| d > 0)
    }

    pub fn require_configuration(&self) -> Result<()> {
        match self.degrees().iter().position(|&d| d == 0) {
            None => Ok(()),
            Some(p) => Err(Error::IsolatedPoint(p)),
        }
    }

    /// Applies a point permutation (`perm[old] = new`) and re-sorts.
    pub fn relabel(&self, perm: &[Point]) -> Result<TripleSystem> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let [x, y, z] = b.points();
                Block::new(perm[x], perm[y], perm[z])
            })
            .collect::<Result<Vec<_>>>()?;
        TripleSystem::new(self.n, blocks)
    }

    /// Drops isolated points and renumbers the survivors densely,
    /// preserving relative order. Returns the compacted system.
    pub fn compact(&self) -> TripleSystem {
        let deg = self.degrees();
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for (p, &d) in deg.iter().enumerate() {
            if d > 0 {
                map[p] = next;
                next += 1;
            }
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let [x, y, z] = b.points();
                Block::new(map[x], map[y], map[z]).expect("relabel keeps points distinct")
            })
            .collect();
        TripleSystem::new(next, blocks).expect("compacting keeps the system well-formed")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triple system serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<TripleSystem> {
        Ok(serde_json::from_str(text)?)
    }
}

/// True iff an STS(n) exists: n mod 6 is 1 or 3.
pub fn admissible(n: usize) -> bool {
    n % 6 == 1 || n % 6 == 3
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    n: usize,
    blocks: Vec<[usize; 3]>,
}

impl Serialize for TripleSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SystemJson {
            n: self.n,
            blocks: self.blocks.iter().map(|b| b.points()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TripleSystem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SystemJson::deserialize(deserializer)?;
        TripleSystem::from_triples(raw.n, &raw.blocks).map_err(D::Error::custom)
    }
}

/// The map f(x, y) = third point of the unique block through x and y,
/// together with that block's index. Defined only for linear systems;
/// total on all pairs exactly when the system is Steiner.
pub struct PairMap {
    n: usize,
    slots: Vec<Option<(Point, u32)>>,
}

impl PairMap {
    pub fn new(sys: &TripleSystem) -> Result<PairMap> {
        let n = sys.point_count();
        let mut slots = vec![None; n * n];
        for (i, b) in sys.blocks().iter().enumerate() {
            for (x, y) in b.pairs() {
                let z = b.third(x, y).expect("pair comes from the block");
                let slot = &mut slots[x * n + y];
                if slot.is_some() {
                    return Err(Error::NotLinear(x, y));
                }
                *slot = Some((z, i as u32));
            }
        }
        Ok(PairMap { n, slots })
    }

    fn slot(&self, x: Point, y: Point) -> Option<(Point, u32)> {
        if x == y || x >= self.n || y >= self.n {
            return None;
        }
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        self.slots[lo * self.n + hi]
    }

    /// f(x, y): the third point of the block through x and y, if any.
    pub fn third(&self, x: Point, y: Point) -> Option<Point> {
        self.slot(x, y).map(|(z, _)| z)
    }

    /// Index of the block covering the pair, if any.
    pub fn block_index(&self, x: Point, y: Point) -> Option<usize> {
        self.slot(x, y).map(|(_, i)| i as usize)
    }

    /// True when every pair of distinct points is covered.
    pub fn is_total(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.slots[x * self.n + y].is_some()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano_raw() -> TripleSystem {
        // Translates of the difference set {0, 1, 3} mod 7.
        let triples: Vec<[usize; 3]> = (0..7).map(|j| [j, (j + 1) % 7, (j + 3) % 7]).collect();
        TripleSystem::from_triples(7, &triples).unwrap()
    }

    #[test]
    fn linearity_examples() {
        let tri = TripleSystem::from_triples(6, &[[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap();
        assert!(tri.is_linear());
        let bad = TripleSystem::from_triples(4, &[[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(!bad.is_linear());
        assert!(matches!(bad.require_linear(), Err(Error::NotLinear(0, 1))));
        let empty = TripleSystem::from_triples(0, &[]).unwrap();
        assert!(empty.is_linear());
    }

    #[test]
    fn malformed_blocks_rejected() {
        assert!(matches!(Block::new(1, 1, 2), Err(Error::RepeatedPoint(..))));
        assert!(matches!(
            TripleSystem::from_triples(3, &[[0, 1, 3]]),
            Err(Error::PointOutOfRange(..))
        ));
        assert!(matches!(
            TripleSystem::from_triples(4, &[[0, 1, 2], [2, 1, 0]]),
            Err(Error::DuplicateBlock(..))
        ));
    }

    #[test]
    fn steiner_detection() {
        let fano = fano_raw();
        assert!(fano.is_steiner());
        assert_eq!(fano.block_count(), 7);
        assert!(fano.degrees().iter().all(|&d| d == 3));

        let tri = TripleSystem::from_triples(6, &[[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap();
        assert!(!tri.is_steiner()); // pair {1, 3} uncovered
    }

    #[test]
    fn admissibility() {
        assert!(admissible(7));
        assert!(admissible(9));
        assert!(!admissible(8));
        for n in 0..200 {
            assert_eq!(admissible(n), n % 6 == 1 || n % 6 == 3);
        }
    }

    #[test]
    fn pair_map_round_trip() {
        let fano = fano_raw();
        let pm = PairMap::new(&fano).unwrap();
        assert!(pm.is_total());
        for b in fano.blocks() {
            let [x, y, z] = b.points();
            assert_eq!(pm.third(x, y), Some(z));
            assert_eq!(pm.third(y, z), Some(x));
            assert_eq!(pm.third(x, z), Some(y));
        }

        let tri = TripleSystem::from_triples(6, &[[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap();
        let pm = PairMap::new(&tri).unwrap();
        assert_eq!(pm.third(0, 1), Some(2));
        assert_eq!(pm.third(1, 3), None);
        assert!(!pm.is_total());

        let bad = TripleSystem::from_triples(4, &[[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(PairMap::new(&bad).is_err());
    }

    #[test]
    fn json_format_is_pinned() {
        let tri = TripleSystem::from_triples(6, &[[2, 1, 0], [2, 3, 4], [4, 5, 0]]).unwrap();
        assert_eq!(tri.to_json(), r#"{"n":6,"blocks":[[0,1,2],[0,4,5],[2,3,4]]}"#);
        let back = TripleSystem::from_json(&tri.to_json()).unwrap();
        assert_eq!(back, tri);
        assert!(TripleSystem::from_json(r#"{"n":2,"blocks":[[0,1,2]]}"#).is_err());
    }

    #[test]
    fn configuration_mode() {
        let tri = TripleSystem::from_triples(6, &[[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap();
        assert!(tri.is_configuration());
        let gap = TripleSystem::from_triples(5, &[[0, 1, 2]]).unwrap();
        assert!(!gap.is_configuration());
        assert!(matches!(gap.require_configuration(), Err(Error::IsolatedPoint(3))));
        assert_eq!(gap.compact().point_count(), 3);
    }
}
