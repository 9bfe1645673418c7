//! Canonical labelings and isomorphism for small configurations.
//!
//! The canonical form of a configuration is the lexicographically least
//! sorted block list over all point relabelings. It is computed by a
//! backtracking search that places blocks of the canonical list one at a
//! time in ascending order; fresh points always receive the next unused
//! labels, so the branching stays small for the block counts handled here
//! (every configuration in the census has at most 15 points).

use crate::error::Result;
use crate::system::{Block, Point, TripleSystem};

/// A relabeling-invariant representative: two systems have equal canonical
/// forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    blocks: Vec<Block>,
}

impl CanonicalForm {
    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The canonical representative as an ordinary system.
    pub fn to_system(&self) -> TripleSystem {
        TripleSystem::new(self.n, self.blocks.clone())
            .expect("canonical forms are well-formed by construction")
    }
}

struct Search<'a> {
    blocks: &'a [Block],
    // old point -> new label
    label: Vec<Option<usize>>,
    next_label: usize,
    used: Vec<bool>,
    prefix: Vec<[usize; 3]>,
    best: Option<Vec<[usize; 3]>>,
}

impl<'a> Search<'a> {
    /// Candidate triples reachable by placing `block` next, assigning its
    /// unlabeled points the next fresh labels in every order.
    fn candidates_for(&self, idx: usize, out: &mut Vec<(usize, [usize; 3], Vec<(Point, usize)>)>) {
        let block = &self.blocks[idx];
        let pts = block.points();
        let unlabeled: Vec<Point> = pts.iter().copied().filter(|&p| self.label[p].is_none()).collect();
        let fixed: Vec<usize> = pts.iter().filter_map(|&p| self.label[p]).collect();
        let fresh: Vec<usize> = (self.next_label..self.next_label + unlabeled.len()).collect();
        let mut perm = (0..unlabeled.len()).collect::<Vec<_>>();
        loop {
            let assignment: Vec<(Point, usize)> =
                perm.iter().enumerate().map(|(i, &j)| (unlabeled[j], fresh[i])).collect();
            let mut triple = [0usize; 3];
            for (i, &lab) in fixed.iter().enumerate() {
                triple[i] = lab;
            }
            for (i, &(_, lab)) in assignment.iter().enumerate() {
                triple[fixed.len() + i] = lab;
            }
            triple.sort_unstable();
            if self.prefix.last().map_or(true, |last| triple > *last) {
                out.push((idx, triple, assignment));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }

    fn run(&mut self) {
        if self.prefix.len() == self.blocks.len() {
            match &self.best {
                Some(best) if *best <= self.prefix => {}
                _ => self.best = Some(self.prefix.clone()),
            }
            return;
        }
        // A fully labeled unused block whose triple cannot extend the
        // ascending prefix makes the branch dead.
        for (i, b) in self.blocks.iter().enumerate() {
            if self.used[i] {
                continue;
            }
            let pts = b.points();
            if pts.iter().all(|&p| self.label[p].is_some()) {
                let mut t = [self.label[pts[0]].unwrap(), self.label[pts[1]].unwrap(), self.label[pts[2]].unwrap()];
                t.sort_unstable();
                if self.prefix.last().map_or(false, |last| t <= *last) {
                    return;
                }
            }
        }
        let mut cands = Vec::new();
        for i in 0..self.blocks.len() {
            if !self.used[i] {
                self.candidates_for(i, &mut cands);
            }
        }
        cands.sort_by(|a, b| a.1.cmp(&b.1));
        let pos = self.prefix.len();
        for (idx, triple, assignment) in cands {
            if let Some(best) = &self.best {
                if best[pos] < triple && self.prefix[..pos] == best[..pos] {
                    // Everything later in the sorted candidate list is worse.
                    break;
                }
            }
            self.used[idx] = true;
            for &(p, lab) in &assignment {
                self.label[p] = Some(lab);
            }
            self.next_label += assignment.len();
            self.prefix.push(triple);

            self.run();

            self.prefix.pop();
            self.next_label -= assignment.len();
            for &(p, _) in &assignment {
                self.label[p] = None;
            }
            self.used[idx] = false;
        }
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Canonical form of a configuration. Rejects systems with isolated points
/// (their point count is not determined by the block list).
pub fn canonical_form(sys: &TripleSystem) -> Result<CanonicalForm> {
    sys.require_configuration()?;
    let mut search = Search {
        blocks: sys.blocks(),
        label: vec![None; sys.point_count()],
        next_label: 0,
        used: vec![false; sys.block_count()],
        prefix: Vec::with_capacity(sys.block_count()),
        best: None,
    };
    search.run();
    let blocks = search
        .best
        .unwrap_or_default()
        .into_iter()
        .map(|t| Block::new(t[0], t[1], t[2]).expect("labels in a triple are distinct"))
        .collect();
    Ok(CanonicalForm { n: sys.point_count(), blocks })
}

/// Isomorphism via canonical form equality, after cheap invariant screening.
pub fn isomorphic(a: &TripleSystem, b: &TripleSystem) -> Result<bool> {
    if a.point_count() != b.point_count() || a.block_count() != b.block_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Reference oracle: tries every point bijection. Only usable on small
/// systems (at most 9 points).
pub fn isomorphic_brute_force(a: &TripleSystem, b: &TripleSystem) -> Result<bool> {
    if a.point_count() != b.point_count() || a.block_count() != b.block_count() {
        return Ok(false);
    }
    let n = a.point_count();
    assert!(n <= 9, "brute-force isomorphism is limited to 9 points");
    let target: Vec<Block> = b.blocks().to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mapped = a.relabel(&perm)?;
        if mapped.blocks() == target.as_slice() {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sail() -> TripleSystem {
        TripleSystem::from_triples(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 0], [0, 3, 6]]).unwrap()
    }

    fn pasch() -> TripleSystem {
        TripleSystem::from_triples(6, &[[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]]).unwrap()
    }

    fn random_relabel(sys: &TripleSystem, rng: &mut ChaCha8Rng) -> TripleSystem {
        let mut perm: Vec<usize> = (0..sys.point_count()).collect();
        perm.shuffle(rng);
        sys.relabel(&perm).unwrap()
    }

    #[test]
    fn canonical_is_relabeling_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for sys in [sail(), pasch()] {
            let form = canonical_form(&sys).unwrap();
            for _ in 0..100 {
                let shuffled = random_relabel(&sys, &mut rng);
                assert_eq!(canonical_form(&shuffled).unwrap(), form);
            }
        }
    }

    #[test]
    fn pasch_and_sail_differ() {
        assert_ne!(canonical_form(&pasch()).unwrap(), canonical_form(&sail()).unwrap());
        assert!(!isomorphic(&pasch(), &sail()).unwrap());
    }

    #[test]
    fn isomorphic_is_reflexive_and_symmetric() {
        let s = sail();
        assert!(isomorphic(&s, &s).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let t = random_relabel(&s, &mut rng);
        assert!(isomorphic(&s, &t).unwrap());
        assert!(isomorphic(&t, &s).unwrap());
    }

    #[test]
    fn isolated_points_are_rejected() {
        let gap = TripleSystem::from_triples(4, &[[0, 1, 2]]).unwrap();
        assert!(canonical_form(&gap).is_err());
    }

    #[test]
    fn agrees_with_brute_force_on_small_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let base = vec![
            TripleSystem::from_triples(6, &[[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap(),
            pasch(),
            sail(),
            TripleSystem::from_triples(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap(),
            TripleSystem::from_triples(9, &[[0, 1, 2], [3, 4, 5], [6, 7, 8]]).unwrap(),
            TripleSystem::from_triples(9, &[[0, 1, 2], [2, 3, 4], [4, 5, 6], [6, 7, 8]]).unwrap(),
            TripleSystem::from_triples(8, &[[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 7]]).unwrap(),
        ];
        let mut cases = Vec::new();
        for sys in &base {
            cases.push((sys.clone(), random_relabel(sys, &mut rng)));
        }
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                cases.push((base[i].clone(), base[j].clone()));
            }
        }
        for (a, b) in cases {
            assert_eq!(
                isomorphic(&a, &b).unwrap(),
                isomorphic_brute_force(&a, &b).unwrap(),
                "mismatch on {:?} vs {:?}",
                a,
                b
            );
        }
    }

    #[test]
    fn empty_configuration_canonicalizes() {
        let empty = TripleSystem::from_triples(0, &[]).unwrap();
        let form = canonical_form(&empty).unwrap();
        assert_eq!(form.point_count(), 0);
        assert!(form.blocks().is_empty());
    }
}
