//! Finding copies of a guest configuration inside a host system.
//!
//! The generic embedder backtracks over guest blocks (most-constrained
//! first) and maps each onto a host block; once two points of a guest block
//! are placed the host block is forced through the pair map, which is what
//! makes the search fast on dense guests. A dumb point-by-point oracle,
//! `brute_force_embed`, provides the reference answer on small hosts.

use crate::error::{Error, Result};
use crate::system::{PairMap, Point, TripleSystem};

/// An injective point map carrying every guest block onto a host block.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Embedding {
    /// Host image of each guest point.
    pub point_map: Vec<Point>,
    /// Host block index for each guest block (aligned with `guest.blocks()`).
    pub block_map: Vec<usize>,
}

impl Embedding {
    /// Independent block-by-block re-validation of the embedding.
    pub fn validate(&self, guest: &TripleSystem, host: &TripleSystem) -> bool {
        if self.point_map.len() != guest.point_count()
            || self.block_map.len() != guest.block_count()
        {
            return false;
        }
        if self.point_map.iter().any(|&p| p >= host.point_count()) {
            return false;
        }
        let mut seen = vec![false; host.point_count()];
        for &p in &self.point_map {
            if seen[p] {
                return false;
            }
            seen[p] = true;
        }
        for (gb, &hb) in guest.blocks().iter().zip(&self.block_map) {
            let Some(host_block) = host.blocks().get(hb) else {
                return false;
            };
            let mut image: Vec<Point> =
                gb.points().iter().map(|&p| self.point_map[p]).collect();
            image.sort_unstable();
            if image != host_block.points() {
                return false;
            }
        }
        true
    }
}

/// Knobs for the embedder.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Collect every embedding instead of stopping at the first.
    pub find_all: bool,
    /// Stop after this many embeddings (0 = unlimited, only with find_all).
    pub limit: usize,
    /// Restrict host blocks to those flagged true (used for monochromatic
    /// searches). Length must equal the host's block count.
    pub block_filter: Option<Vec<bool>>,
    /// Backtracking node budget; exceeding it truncates the search.
    pub max_nodes: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { find_all: false, limit: 1, block_filter: None, max_nodes: 200_000_000 }
    }
}

impl SearchOptions {
    pub fn first() -> Self {
        SearchOptions::default()
    }

    pub fn all() -> Self {
        SearchOptions { find_all: true, limit: 0, ..SearchOptions::default() }
    }

    pub fn with_filter(mut self, filter: Vec<bool>) -> Self {
        self.block_filter = Some(filter);
        self
    }

    fn cap(&self) -> usize {
        if self.limit == 0 {
            usize::MAX
        } else {
            self.limit
        }
    }
}

/// Search outcome. `truncated` marks a search cut short by the node budget,
/// in which case the embedding list may be incomplete.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub embeddings: Vec<Embedding>,
    pub truncated: bool,
    pub nodes: u64,
}

struct EmbedState<'a> {
    guest: &'a TripleSystem,
    host: &'a TripleSystem,
    pair_map: PairMap,
    host_blocks_through: Vec<Vec<usize>>,
    allowed: Option<&'a [bool]>,
    order: Vec<usize>,
    point_map: Vec<Option<Point>>,
    used_host: Vec<bool>,
    block_map: Vec<usize>,
    cap: usize,
    max_nodes: u64,
    nodes: u64,
    truncated: bool,
    found: Vec<Embedding>,
}

impl<'a> EmbedState<'a> {
    fn allowed_block(&self, idx: usize) -> bool {
        self.allowed.map_or(true, |f| f[idx])
    }

    fn record(&mut self) {
        let point_map = self.point_map.iter().map(|p| p.unwrap()).collect();
        self.found.push(Embedding { point_map, block_map: self.block_map.clone() });
    }

    fn done(&self) -> bool {
        self.truncated || self.found.len() >= self.cap
    }

    fn dfs(&mut self, depth: usize) {
        if self.done() {
            return;
        }
        if depth == self.order.len() {
            self.record();
            return;
        }
        let gi = self.order[depth];
        let gpts = self.guest.blocks()[gi].points();
        let mapped: Vec<(Point, Point)> =
            gpts.iter().filter_map(|&g| self.point_map[g].map(|h| (g, h))).collect();

        let candidates: Vec<usize> = match mapped.len() {
            0 => (0..self.host.block_count()).filter(|&i| self.allowed_block(i)).collect(),
            1 => self.host_blocks_through[mapped[0].1]
                .iter()
                .copied()
                .filter(|&i| self.allowed_block(i))
                .collect(),
            _ => {
                let forced = self.pair_map.block_index(mapped[0].1, mapped[1].1);
                match forced {
                    Some(i)
                        if self.allowed_block(i)
                            && mapped
                                .iter()
                                .all(|&(_, h)| self.host.blocks()[i].contains(h)) =>
                    {
                        vec![i]
                    }
                    _ => Vec::new(),
                }
            }
        };

        for hb in candidates {
            let host_pts = self.host.blocks()[hb].points();
            let free_guest: Vec<Point> =
                gpts.iter().copied().filter(|&g| self.point_map[g].is_none()).collect();
            let free_host: Vec<Point> = host_pts
                .iter()
                .copied()
                .filter(|&h| !mapped.iter().any(|&(_, m)| m == h))
                .collect();
            if free_host.len() != free_guest.len() {
                continue;
            }
            let mut perm: Vec<usize> = (0..free_guest.len()).collect();
            loop {
                self.nodes += 1;
                if self.nodes > self.max_nodes {
                    self.truncated = true;
                    return;
                }
                let images: Vec<Point> = perm.iter().map(|&i| free_host[i]).collect();
                if images.iter().all(|&h| !self.used_host[h]) {
                    for (&g, &h) in free_guest.iter().zip(&images) {
                        self.point_map[g] = Some(h);
                        self.used_host[h] = true;
                    }
                    self.block_map[gi] = hb;
                    self.dfs(depth + 1);
                    for (&g, &h) in free_guest.iter().zip(&images) {
                        self.point_map[g] = None;
                        self.used_host[h] = false;
                    }
                    if self.done() {
                        return;
                    }
                }
                if !crate::patterns::next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }
}

/// Orders guest blocks most-constrained-first: each step picks the block
/// sharing the most points with already-ordered blocks (ties to the lowest
/// index), which maximizes forced placements via the pair map.
fn guest_block_order(guest: &TripleSystem) -> Vec<usize> {
    let m = guest.block_count();
    let mut placed = vec![false; guest.point_count()];
    let mut order = Vec::with_capacity(m);
    let mut remaining: Vec<usize> = (0..m).collect();
    while !remaining.is_empty() {
        let (pos, &best) = remaining
            .iter()
            .enumerate()
            .max_by_key(|&(_, &i)| {
                let shared =
                    guest.blocks()[i].points().iter().filter(|&&p| placed[p]).count();
                (shared, std::cmp::Reverse(i))
            })
            .expect("remaining is non-empty");
        for p in guest.blocks()[best].points() {
            placed[p] = true;
        }
        order.push(best);
        remaining.remove(pos);
    }
    order
}

/// Finds embeddings of `guest` into `host`. The guest must be in
/// configuration mode and the host linear. Deterministic: guest blocks are
/// processed most-constrained-first and host candidates ascending.
pub fn embed(guest: &TripleSystem, host: &TripleSystem, opts: &SearchOptions) -> Result<SearchResult> {
    guest.require_configuration()?;
    host.require_linear()?;
    if let Some(f) = &opts.block_filter {
        if f.len() != host.block_count() {
            return Err(Error::ColoringLength { expected: host.block_count(), got: f.len() });
        }
    }
    let mut through = vec![Vec::new(); host.point_count()];
    for (i, b) in host.blocks().iter().enumerate() {
        for p in b.points() {
            through[p].push(i);
        }
    }
    let mut state = EmbedState {
        guest,
        host,
        pair_map: PairMap::new(host)?,
        host_blocks_through: through,
        allowed: opts.block_filter.as_deref(),
        order: guest_block_order(guest),
        point_map: vec![None; guest.point_count()],
        used_host: vec![false; host.point_count()],
        block_map: vec![usize::MAX; guest.block_count()],
        cap: if opts.find_all { opts.cap() } else { opts.limit.max(1) },
        max_nodes: opts.max_nodes,
        nodes: 0,
        truncated: false,
        found: Vec::new(),
    };
    if guest.block_count() == 0 {
        // Degenerate guest: nothing to map (configuration mode forces n = 0).
        return Ok(SearchResult {
            embeddings: vec![Embedding { point_map: vec![], block_map: vec![] }],
            truncated: false,
            nodes: 0,
        });
    }
    state.dfs(0);
    Ok(SearchResult { embeddings: state.found, truncated: state.truncated, nodes: state.nodes })
}

/// Decision form of [`embed`].
pub fn contains(guest: &TripleSystem, host: &TripleSystem) -> Result<bool> {
    Ok(!embed(guest, host, &SearchOptions::first())?.embeddings.is_empty())
}

/// Reference oracle: enumerates injective point maps one guest point at a
/// time (in natural order), keeping a partial map only while every fully
/// mapped guest block lands on a host block and every mapped guest pair
/// lands on a covered host pair. Limited to hosts with at most 12 points.
pub fn brute_force_embed(guest: &TripleSystem, host: &TripleSystem) -> Result<Vec<Embedding>> {
    if host.point_count() > 12 {
        return Err(Error::Unsupported(format!(
            "brute-force embedding host has {} points (limit 12)",
            host.point_count()
        )));
    }
    guest.require_configuration()?;
    host.require_linear()?;
    let pair_map = PairMap::new(host)?;
    let g = guest.point_count();
    let mut map = vec![usize::MAX; g];
    let mut used = vec![false; host.point_count()];
    let mut found = Vec::new();

    fn consistent(
        guest: &TripleSystem,
        host: &TripleSystem,
        pair_map: &PairMap,
        map: &[usize],
        p: Point,
    ) -> bool {
        for b in guest.blocks() {
            if !b.contains(p) {
                continue;
            }
            let imgs: Vec<Point> =
                b.points().iter().filter(|&&q| map[q] != usize::MAX).map(|&q| map[q]).collect();
            match imgs.len() {
                2 => {
                    if pair_map.block_index(imgs[0], imgs[1]).is_none() {
                        return false;
                    }
                }
                3 => {
                    let idx = match pair_map.block_index(imgs[0], imgs[1]) {
                        Some(i) => i,
                        None => return false,
                    };
                    if !host.blocks()[idx].contains(imgs[2]) {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn rec(
        guest: &TripleSystem,
        host: &TripleSystem,
        pair_map: &PairMap,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        p: Point,
        found: &mut Vec<Embedding>,
    ) {
        if p == map.len() {
            let block_map = guest
                .blocks()
                .iter()
                .map(|b| {
                    let [x, y, _] = b.points();
                    pair_map
                        .block_index(map[x], map[y])
                        .expect("complete maps cover every guest block")
                })
                .collect();
            found.push(Embedding { point_map: map.clone(), block_map });
            return;
        }
        for h in 0..host.point_count() {
            if used[h] {
                continue;
            }
            map[p] = h;
            used[h] = true;
            if consistent(guest, host, pair_map, map, p) {
                rec(guest, host, pair_map, map, used, p + 1, found);
            }
            map[p] = usize::MAX;
            used[h] = false;
        }
    }

    if g > host.point_count() {
        return Ok(found); // pigeonhole
    }
    rec(guest, host, &pair_map, &mut map, &mut used, 0, &mut found);
    Ok(found)
}

/// A rainbow matching in a 3x3 properly colored matrix: a permutation
/// sigma with the three cells (r, sigma(r)) pairwise distinct in color.
/// Brute force over the 6 permutations in lexicographic order.
pub fn rainbow_matching_3x3(matrix: &[[usize; 3]; 3]) -> Result<Option<[usize; 3]>> {
    for r in 0..3 {
        for c in 0..3 {
            for c2 in c + 1..3 {
                if matrix[r][c] == matrix[r][c2] || matrix[c][r] == matrix[c2][r] {
                    return Err(Error::ImproperMatrix);
                }
            }
        }
    }
    const PERMS: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for perm in PERMS {
        let cells = [matrix[0][perm[0]], matrix[1][perm[1]], matrix[2][perm[2]]];
        if cells[0] != cells[1] && cells[0] != cells[2] && cells[1] != cells[2] {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}

/// Constructive wicket search in a Steiner triple system: take two disjoint
/// blocks X, Y, color the complete bipartite graph between them by the
/// third point f(x, y), and look for a rainbow matching. The three rainbow
/// blocks plus X and Y form a wicket (rows = rainbow blocks, columns = X
/// and Y). Returns `None` exactly when no disjoint block pair yields a
/// rainbow matching, which happens only for the Fano plane (it has no two
/// disjoint blocks at all).
pub fn find_wicket_fast(sts: &TripleSystem) -> Result<Option<Embedding>> {
    if !sts.is_steiner() {
        return Err(Error::NotSteiner);
    }
    let pm = PairMap::new(sts)?;
    let m = sts.block_count();
    for i in 0..m {
        for j in i + 1..m {
            let x = sts.blocks()[i].points();
            let y = sts.blocks()[j].points();
            if x.iter().any(|&p| y.contains(&p)) {
                continue;
            }
            let mut matrix = [[0usize; 3]; 3];
            for r in 0..3 {
                for c in 0..3 {
                    matrix[r][c] =
                        pm.third(x[r], y[c]).expect("Steiner systems cover every pair");
                }
            }
            let Some(perm) = rainbow_matching_3x3(&matrix)? else {
                continue;
            };
            let z = [matrix[0][perm[0]], matrix[1][perm[1]], matrix[2][perm[2]]];
            // The rainbow points are pairwise distinct by rainbowness and
            // never land in X or Y: f(x, y) inside X would put a pair of X
            // in a second block.
            debug_assert!(z.iter().all(|p| !x.contains(p) && !y.contains(p)));
            // Guest labeling: point r*3+c of a 3x3 matrix whose rows and
            // first two columns are blocks; column 0 -> X, column 1 -> Y,
            // column 2 -> rainbow points.
            let mut point_map = vec![0usize; 9];
            for r in 0..3 {
                point_map[3 * r] = x[r];
                point_map[3 * r + 1] = y[perm[r]];
                point_map[3 * r + 2] = z[r];
            }
            // Guest blocks sorted: [0,1,2], [0,3,6], [1,4,7], [3,4,5], [6,7,8].
            let row = |r: usize| {
                pm.block_index(x[r], y[perm[r]]).expect("row pair is covered")
            };
            let block_map = vec![row(0), i, j, row(1), row(2)];
            let guest = wicket_guest();
            let embedding = Embedding { point_map, block_map };
            debug_assert!(embedding.validate(&guest, sts));
            return Ok(Some(embedding));
        }
    }
    Ok(None)
}

/// The wicket with the labeling used by [`find_wicket_fast`] embeddings:
/// three rows and the first two columns of a 3x3 point matrix.
pub fn wicket_guest() -> TripleSystem {
    TripleSystem::from_triples(9, &[[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7]])
        .expect("the wicket is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> TripleSystem {
        let triples: Vec<[usize; 3]> = (0..7).map(|j| [j, (j + 1) % 7, (j + 3) % 7]).collect();
        TripleSystem::from_triples(7, &triples).unwrap()
    }

    fn triangle() -> TripleSystem {
        TripleSystem::from_triples(6, &[[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap()
    }

    #[test]
    fn triangle_embeds_in_fano() {
        let res = embed(&triangle(), &fano(), &SearchOptions::first()).unwrap();
        assert_eq!(res.embeddings.len(), 1);
        assert!(res.embeddings[0].validate(&triangle(), &fano()));
        assert!(!res.truncated);

        let all = embed(&triangle(), &fano(), &SearchOptions::all()).unwrap();
        let brute = brute_force_embed(&triangle(), &fano()).unwrap();
        let mut a: Vec<_> = all.embeddings.iter().map(|e| e.point_map.clone()).collect();
        let mut b: Vec<_> = brute.iter().map(|e| e.point_map.clone()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn no_wicket_in_fano() {
        let res = embed(&wicket_guest(), &fano(), &SearchOptions::all()).unwrap();
        assert!(res.embeddings.is_empty());
        assert_eq!(find_wicket_fast(&fano()).unwrap(), None);
    }

    #[test]
    fn single_block_count_in_sts() {
        let single = TripleSystem::from_triples(3, &[[0, 1, 2]]).unwrap();
        let res = embed(&single, &fano(), &SearchOptions::all()).unwrap();
        assert_eq!(res.embeddings.len(), 6 * 7); // 3! labelings per block
    }

    #[test]
    fn guest_larger_than_host_is_empty() {
        let res = embed(&fano(), &triangle(), &SearchOptions::all()).unwrap();
        assert!(res.embeddings.is_empty());
        assert!(brute_force_embed(&fano(), &triangle()).unwrap().is_empty());
    }

    #[test]
    fn triangle_automorphisms() {
        let res = brute_force_embed(&triangle(), &triangle()).unwrap();
        assert_eq!(res.len(), 6);
        let via_embed = embed(&triangle(), &triangle(), &SearchOptions::all()).unwrap();
        assert_eq!(via_embed.embeddings.len(), 6);
    }

    #[test]
    fn rainbow_examples() {
        // All nine colors distinct: the identity qualifies.
        let distinct = [[0, 1, 2], [3, 4, 5], [6, 7, 8]];
        assert_eq!(rainbow_matching_3x3(&distinct).unwrap(), Some([0, 1, 2]));

        // The case-analysis matrix: a at (0,0) and (2,2), b at (1,1),
        // c at (0,1),(1,0), d at (1,2),(2,1), fresh colors elsewhere.
        let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
        let matrix = [[a, c, e], [c, b, d], [f, d, a]];
        let perm = rainbow_matching_3x3(&matrix).unwrap().unwrap();
        let cells = [matrix[0][perm[0]], matrix[1][perm[1]], matrix[2][perm[2]]];
        assert!(cells[0] != cells[1] && cells[1] != cells[2] && cells[0] != cells[2]);
        // The matching (0,2),(1,0),(2,1) is rainbow in this matrix.
        assert!(matrix[0][2] != matrix[1][0] && matrix[1][0] != matrix[2][1]
            && matrix[0][2] != matrix[2][1]);

        let improper = [[0, 0, 1], [2, 3, 4], [5, 6, 7]];
        assert!(rainbow_matching_3x3(&improper).is_err());
    }

    #[test]
    fn node_budget_truncates() {
        let opts = SearchOptions { max_nodes: 2, find_all: true, ..SearchOptions::all() };
        let res = embed(&triangle(), &fano(), &opts).unwrap();
        assert!(res.truncated);
    }

    #[test]
    fn block_filter_restricts_hits() {
        let host = fano();
        let single = TripleSystem::from_triples(3, &[[0, 1, 2]]).unwrap();
        let mut filter = vec![false; host.block_count()];
        filter[3] = true;
        let res =
            embed(&single, &host, &SearchOptions::all().with_filter(filter)).unwrap();
        assert_eq!(res.embeddings.len(), 6);
        assert!(res.embeddings.iter().all(|e| e.block_map == vec![3]));
    }
}
