//! The pattern calculus: properly edge-colored forests and their matchings.
//!
//! An s-pattern is a properly edge-colored forest written as a union of
//! monochromatic matchings M^1..M^s such that every edge of M^i has an
//! endpoint covered by no later matching M^j (j > i). An extended s-pattern
//! arises from a disconnected s-pattern by joining two of its components
//! with a single-edge matching of a new color. Augmenting each color class
//! with a fresh point turns patterns into linear triple systems.
//!
//! Pattern text comes in two shapes, matching how such forests are usually
//! written down: path words like `abcab` (one letter per edge along a path,
//! comma-separated components), and explicit edge lists like `0 1 p; 2 3 q`
//! for trees that are not paths.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::system::{Block, Point, TripleSystem};

/// An edge color. Displays as `a`..`z` for the first 26 ids, then `c26`,
/// `c27`, ... so generated witnesses can use arbitrarily many colors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColorId(pub u32);

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0 as u8) as char)
        } else {
            write!(f, "c{}", self.0)
        }
    }
}

impl FromStr for ColorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if bytes.len() == 1 && bytes[0].is_ascii_lowercase() {
            return Ok(ColorId((bytes[0] - b'a') as u32));
        }
        if let Some(num) = s.strip_prefix('c') {
            if let Ok(v) = num.parse::<u32>() {
                return Ok(ColorId(v));
            }
        }
        Err(Error::PatternParse(format!("bad color {s:?}")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ColoredEdge {
    pub u: Point,
    pub v: Point,
    pub color: ColorId,
}

impl ColoredEdge {
    fn new(u: Point, v: Point, color: ColorId) -> Self {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        ColoredEdge { u, v, color }
    }

    fn touches(&self, p: Point) -> bool {
        self.u == p || self.v == p
    }
}

/// A properly edge-colored forest. Properness means edges at a common
/// vertex carry distinct colors, so every color class is a matching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredForest {
    vertex_count: usize,
    edges: Vec<ColoredEdge>,
}

impl ColoredForest {
    pub fn new(vertex_count: usize, edges: Vec<(Point, Point, ColorId)>) -> Result<Self> {
        let edges: Vec<ColoredEdge> =
            edges.into_iter().map(|(u, v, c)| ColoredEdge::new(u, v, c)).collect();
        for e in &edges {
            if e.u == e.v {
                return Err(Error::PatternParse(format!("loop edge at vertex {}", e.u)));
            }
            if e.v >= vertex_count {
                return Err(Error::PatternParse(format!(
                    "edge {} {} exceeds vertex count {vertex_count}",
                    e.u, e.v
                )));
            }
        }
        for (i, e) in edges.iter().enumerate() {
            for f in &edges[..i] {
                if e.u == f.u && e.v == f.v {
                    return Err(Error::PatternParse(format!(
                        "repeated edge {} {} (colors {} and {})",
                        e.u, e.v, f.color, e.color
                    )));
                }
                if e.color == f.color && (f.touches(e.u) || f.touches(e.v)) {
                    return Err(Error::PatternParse(format!(
                        "improper coloring: edges {} {} and {} {} share a vertex and color {}",
                        f.u, f.v, e.u, e.v, e.color
                    )));
                }
            }
        }
        // Acyclicity via union-find.
        let mut parent: Vec<usize> = (0..vertex_count).collect();
        for e in &edges {
            let (ru, rv) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if ru == rv {
                return Err(Error::PatternParse(format!(
                    "edge {} {} (color {}) closes a cycle",
                    e.u, e.v, e.color
                )));
            }
            parent[ru] = rv;
        }
        Ok(ColoredForest { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    /// Distinct colors in ascending order.
    pub fn colors(&self) -> Vec<ColorId> {
        let mut cs: Vec<ColorId> = self.edges.iter().map(|e| e.color).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    pub fn color_class(&self, color: ColorId) -> Vec<ColoredEdge> {
        self.edges.iter().copied().filter(|e| e.color == color).collect()
    }

    /// Flags the vertices covered by any edge whose color passes `active`.
    fn covered_by(&self, active: &dyn Fn(ColorId) -> bool) -> Vec<bool> {
        let mut covered = vec![false; self.vertex_count];
        for e in &self.edges {
            if active(e.color) {
                covered[e.u] = true;
                covered[e.v] = true;
            }
        }
        covered
    }

    /// Component id per vertex, counting only vertices touched by edges.
    /// Untouched vertices get `None`.
    pub fn edge_components(&self) -> Vec<Option<usize>> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        for e in &self.edges {
            let (ru, rv) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        let touched = self.covered_by(&|_| true);
        let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
        (0..self.vertex_count)
            .map(|v| {
                if !touched[v] {
                    return None;
                }
                let root = find(&mut parent, v);
                let next = ids.len();
                Some(*ids.entry(root).or_insert(next))
            })
            .collect()
    }

    /// The forest with one color class removed (vertex set unchanged).
    pub fn without_color(&self, color: ColorId) -> ColoredForest {
        ColoredForest {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().copied().filter(|e| e.color != color).collect(),
        }
    }
}

fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Parses pattern text: either comma-separated path words (`abcab`,
/// `pqp,pq`) on fresh vertices, or explicit `u v color` edge lines
/// separated by `;` or newlines.
pub fn parse_pattern(text: &str) -> Result<ColoredForest> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::PatternParse("empty pattern".into()));
    }
    if trimmed.chars().any(|c| c.is_ascii_digit()) {
        parse_edge_list(trimmed)
    } else {
        parse_path_words(trimmed)
    }
}

fn parse_path_words(text: &str) -> Result<ColoredForest> {
    let mut edges = Vec::new();
    let mut next_vertex = 0usize;
    for word in text.split(',') {
        let word = word.trim();
        if word.is_empty() {
            return Err(Error::PatternParse("empty path component".into()));
        }
        let start = next_vertex;
        for (i, ch) in word.chars().enumerate() {
            if !ch.is_ascii_lowercase() {
                return Err(Error::PatternParse(format!("bad edge color {ch:?}")));
            }
            let color = ColorId((ch as u8 - b'a') as u32);
            edges.push((start + i, start + i + 1, color));
        }
        next_vertex = start + word.chars().count() + 1;
    }
    ColoredForest::new(next_vertex, edges)
}

fn parse_edge_list(text: &str) -> Result<ColoredForest> {
    let mut edges = Vec::new();
    let mut max_vertex = 0usize;
    for line in text.split(|c| c == '\n' || c == ';') {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::PatternParse(format!("expected \"u v color\", got {line:?}")));
        }
        let u: usize = parts[0]
            .parse()
            .map_err(|_| Error::PatternParse(format!("bad vertex {:?}", parts[0])))?;
        let v: usize = parts[1]
            .parse()
            .map_err(|_| Error::PatternParse(format!("bad vertex {:?}", parts[1])))?;
        let color: ColorId = parts[2].parse()?;
        max_vertex = max_vertex.max(u).max(v);
        edges.push((u, v, color));
    }
    if edges.is_empty() {
        return Err(Error::PatternParse("no edges".into()));
    }
    ColoredForest::new(max_vertex + 1, edges)
}

/// Checks the defining covering condition for the given matching order:
/// for each position i, every edge of that color has an endpoint not
/// covered by any color placed after i.
pub fn is_s_pattern(forest: &ColoredForest, order: &[ColorId]) -> Result<bool> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != order.len() || sorted != forest.colors() {
        return Err(Error::OrderMismatch);
    }
    for (i, &color) in order.iter().enumerate() {
        let later = &order[i + 1..];
        let covered = forest.covered_by(&|c| later.contains(&c));
        for e in forest.color_class(color) {
            if covered[e.u] && covered[e.v] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Greedy matching-order search. At each step a color class is eligible
/// when each of its edges has an endpoint untouched by the other remaining
/// classes; any eligible class can safely take the earliest open position
/// (removing a class only relaxes the condition for the rest), so the
/// greedy search succeeds exactly when some valid order exists. The
/// smallest eligible color is taken for determinism.
pub fn find_pattern_order(forest: &ColoredForest) -> Option<Vec<ColorId>> {
    let mut remaining = forest.colors();
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let pick = remaining.iter().copied().find(|&c| {
            let covered = forest.covered_by(&|d| d != c && remaining.contains(&d));
            forest.color_class(c).iter().all(|e| !covered[e.u] || !covered[e.v])
        })?;
        remaining.retain(|&c| c != pick);
        order.push(pick);
    }
    Some(order)
}

/// Exhaustive reference search over all s! orders, kept independent of the
/// greedy path for cross-checking.
pub fn find_pattern_order_brute(forest: &ColoredForest) -> Option<Vec<ColorId>> {
    let colors = forest.colors();
    let mut perm: Vec<usize> = (0..colors.len()).collect();
    loop {
        let order: Vec<ColorId> = perm.iter().map(|&i| colors[i]).collect();
        if is_s_pattern(forest, &order).expect("order is a permutation of the colors") {
            return Some(order);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
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

/// Certificate that a forest is an extended s-pattern: removing the
/// single-edge bridge class leaves a disconnected s-pattern (in the given
/// order) whose two bridged components the bridge reconnects.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedWitness {
    pub bridge: ColorId,
    pub order: Vec<ColorId>,
}

/// Structural validation of an extended-pattern witness, independent of
/// how the witness was found.
pub fn is_extended_witness(forest: &ColoredForest, witness: &ExtendedWitness) -> Result<bool> {
    let class = forest.color_class(witness.bridge);
    if class.len() != 1 {
        return Ok(false);
    }
    let bridge = class[0];
    let residual = forest.without_color(witness.bridge);
    // Both endpoints must belong to the residual pattern (covered by its
    // edges) and lie in two distinct components of it.
    let comps = residual.edge_components();
    match (comps[bridge.u], comps[bridge.v]) {
        (Some(cu), Some(cv)) if cu != cv => {}
        _ => return Ok(false),
    }
    match is_s_pattern(&residual, &witness.order) {
        Ok(v) => Ok(v),
        Err(Error::OrderMismatch) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Searches for an extended-pattern witness by trying every single-edge
/// color class as the bridge. Forests that already admit a plain matching
/// order are reported as patterns, not extended patterns (the plain order
/// is the stronger certificate), so this returns `None` for them.
pub fn find_extended_witness(forest: &ColoredForest) -> Option<ExtendedWitness> {
    if find_pattern_order(forest).is_some() {
        return None;
    }
    for color in forest.colors() {
        if forest.color_class(color).len() != 1 {
            continue;
        }
        let residual = forest.without_color(color);
        if let Some(order) = find_pattern_order(&residual) {
            let witness = ExtendedWitness { bridge: color, order };
            if is_extended_witness(forest, &witness).unwrap_or(false) {
                return Some(witness);
            }
        }
    }
    None
}

/// Result of augmenting a pattern: the triple system together with the
/// color -> augmenting point assignment that produced it.
#[derive(Clone, Debug)]
pub struct Augmentation {
    pub system: TripleSystem,
    /// Augmenting point chosen for each color class.
    pub augmenting: BTreeMap<ColorId, Point>,
    /// Matching order certifying the pattern (bridge excluded when present).
    pub order: Vec<ColorId>,
    pub bridge: Option<ColorId>,
}

/// Augments each color class with one fresh point: every edge uv of color
/// i becomes the block {u, v, v_i}. Requires the forest to be an s-pattern,
/// or an extended s-pattern when a bridge color is supplied.
pub fn augment(forest: &ColoredForest, bridge: Option<ColorId>) -> Result<Augmentation> {
    let order = match bridge {
        None => find_pattern_order(forest).ok_or(Error::NotAPattern)?,
        Some(b) => {
            let order =
                find_pattern_order(&forest.without_color(b)).ok_or(Error::NotAPattern)?;
            let witness = ExtendedWitness { bridge: b, order: order.clone() };
            if !is_extended_witness(forest, &witness)? {
                return Err(Error::InvalidBridge(b.to_string()));
            }
            order
        }
    };
    let colors = forest.colors();
    let mut augmenting = BTreeMap::new();
    let mut next = forest.vertex_count();
    for &c in &colors {
        augmenting.insert(c, next);
        next += 1;
    }
    let blocks = forest
        .edges()
        .iter()
        .map(|e| Block::new(e.u, e.v, augmenting[&e.color]))
        .collect::<Result<Vec<_>>>()?;
    let system = TripleSystem::new(next, blocks)?;
    system.require_linear()?;
    Ok(Augmentation { system, augmenting, order, bridge })
}

/// Exhaustive generator of properly colored forests with up to `max_edges`
/// edges: one representative per isomorphism class of the underlying
/// forest, with colorings per shape enumerated up to color renaming.
/// Intended as a corpus for the order-search cross-checks.
pub fn enumerate_colored_forests(max_edges: usize) -> Vec<ColoredForest> {
    let mut shapes: Vec<Vec<(usize, usize)>> = vec![vec![(0, 1)]];
    let mut all_shapes: Vec<Vec<(usize, usize)>> = vec![shapes[0].clone()];
    for _ in 1..max_edges {
        let mut next: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for shape in &shapes {
            let verts = shape.iter().map(|&(_, v)| v).max().unwrap() + 1;
            let mut extensions: Vec<Vec<(usize, usize)>> = Vec::new();
            // existing-existing edges that keep the graph a forest
            for u in 0..verts {
                for v in u + 1..verts {
                    let mut e = shape.clone();
                    e.push((u, v));
                    if is_forest(&e, verts) {
                        extensions.push(e);
                    }
                }
            }
            // existing-new and new-new edges
            for u in 0..verts {
                let mut e = shape.clone();
                e.push((u, verts));
                extensions.push(e);
            }
            let mut e = shape.clone();
            e.push((verts, verts + 1));
            extensions.push(e);

            for ext in extensions {
                let sig = forest_signature(&ext);
                if seen.insert(sig) {
                    next.push(ext);
                }
            }
        }
        all_shapes.extend(next.iter().cloned());
        shapes = next;
    }

    let mut result = Vec::new();
    for shape in &all_shapes {
        let verts = shape.iter().map(|&(_, v)| v).max().unwrap() + 1;
        let mut coloring = vec![0u32; shape.len()];
        enumerate_colorings(shape, &mut coloring, 1, &mut |colors| {
            let edges: Vec<(usize, usize, ColorId)> =
                shape.iter().zip(colors).map(|(&(u, v), &c)| (u, v, ColorId(c))).collect();
            result
                .push(ColoredForest::new(verts, edges).expect("enumerated colorings are proper"));
        });
    }
    result
}

fn is_forest(edges: &[(usize, usize)], verts: usize) -> bool {
    let mut parent: Vec<usize> = (0..verts).collect();
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Canonical string for an uncolored forest: rooted-tree hashing per
/// component, rooted at the tree center, component strings sorted.
fn forest_signature(edges: &[(usize, usize)]) -> String {
    let verts = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
    let mut adj = vec![Vec::new(); verts];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp = vec![usize::MAX; verts];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..verts {
        if comp[start] != usize::MAX || adj[start].is_empty() {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        comps.push(members);
    }
    let mut sigs: Vec<String> = comps
        .iter()
        .map(|members| {
            tree_centers(members, &adj)
                .iter()
                .map(|&c| rooted_signature(c, usize::MAX, &adj))
                .min()
                .unwrap()
        })
        .collect();
    sigs.sort();
    sigs.join("|")
}

fn tree_centers(members: &[usize], adj: &[Vec<usize>]) -> Vec<usize> {
    if members.len() == 1 {
        return vec![members[0]];
    }
    let mut degree: BTreeMap<usize, usize> = members.iter().map(|&v| (v, adj[v].len())).collect();
    let mut layer: Vec<usize> = members.iter().copied().filter(|v| degree[v] <= 1).collect();
    let mut alive = members.len();
    while alive > 2 {
        let mut next = Vec::new();
        alive -= layer.len();
        for &v in &layer {
            degree.insert(v, 0);
            for &w in &adj[v] {
                let d = degree.get_mut(&w).unwrap();
                if *d > 0 {
                    *d -= 1;
                    if *d == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn rooted_signature(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_signature(w, v, adj))
        .collect();
    children.sort();
    format!("({})", children.join(""))
}

fn enumerate_colorings(
    edges: &[(usize, usize)],
    coloring: &mut Vec<u32>,
    index: usize,
    emit: &mut dyn FnMut(&[u32]),
) {
    if index == edges.len() {
        emit(coloring);
        return;
    }
    let used = coloring[..index].iter().copied().max().unwrap_or(0);
    let (u, v) = edges[index];
    'colors: for c in 0..=used + 1 {
        for i in 0..index {
            if coloring[i] == c {
                let (a, b) = edges[i];
                if a == u || a == v || b == u || b == v {
                    continue 'colors;
                }
            }
        }
        coloring[index] = c;
        enumerate_colorings(edges, coloring, index + 1, emit);
    }
    coloring[index] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;

    fn color(s: &str) -> ColorId {
        s.parse().unwrap()
    }

    #[test]
    fn parse_path_words_examples() {
        let aba = parse_pattern("aba").unwrap();
        assert_eq!(aba.vertex_count(), 4);
        assert_eq!(aba.edges().len(), 3);
        assert_eq!(aba.colors(), vec![color("a"), color("b")]);

        let two = parse_pattern("pqp,pq").unwrap();
        assert_eq!(two.edges().len(), 5);
        assert_eq!(two.vertex_count(), 7);
        assert_eq!(two.color_class(color("p")).len(), 3);

        assert!(parse_pattern("aa").is_err());
    }

    #[test]
    fn parse_edge_lists_examples() {
        let star = parse_pattern("0 1 p; 0 2 q; 0 3 r; 2 4 p; 5 6 q").unwrap();
        assert_eq!(star.vertex_count(), 7);
        assert_eq!(star.colors().len(), 3);

        let cyc = parse_pattern("0 1 a; 1 2 b; 2 0 c");
        assert!(matches!(cyc, Err(Error::PatternParse(ref m)) if m.contains("cycle")));
        let improper = parse_pattern("0 1 a; 1 2 a");
        assert!(matches!(improper, Err(Error::PatternParse(ref m)) if m.contains("improper")));
    }

    #[test]
    fn s_pattern_checks() {
        let aba = parse_pattern("aba").unwrap();
        assert!(is_s_pattern(&aba, &[color("a"), color("b")]).unwrap());
        assert!(!is_s_pattern(&aba, &[color("b"), color("a")]).unwrap());

        let abab = parse_pattern("abab").unwrap();
        assert!(!is_s_pattern(&abab, &[color("a"), color("b")]).unwrap());
        assert!(!is_s_pattern(&abab, &[color("b"), color("a")]).unwrap());

        let single = parse_pattern("a").unwrap();
        assert!(is_s_pattern(&single, &[color("a")]).unwrap());

        assert!(is_s_pattern(&aba, &[color("a")]).is_err());
    }

    #[test]
    fn order_search_examples() {
        assert!(find_pattern_order(&parse_pattern("abcba").unwrap()).is_some());
        assert!(find_pattern_order(&parse_pattern("abab").unwrap()).is_none());
        assert!(find_pattern_order_brute(&parse_pattern("abab").unwrap()).is_none());
        // All-distinct coloring always admits an order.
        let distinct = parse_pattern("abcde").unwrap();
        let order = find_pattern_order(&distinct).unwrap();
        assert!(is_s_pattern(&distinct, &order).unwrap());
    }

    #[test]
    fn greedy_matches_brute_force_on_small_forests() {
        let forests = enumerate_colored_forests(4);
        assert!(forests.len() > 50);
        for f in &forests {
            let greedy = find_pattern_order(f);
            let brute = find_pattern_order_brute(f);
            assert_eq!(greedy.is_some(), brute.is_some(), "disagree on {f:?}");
            if let Some(order) = greedy {
                assert!(is_s_pattern(f, &order).unwrap());
            }
        }
    }

    #[test]
    fn extended_witnesses() {
        let abcab = parse_pattern("abcab").unwrap();
        let w = find_extended_witness(&abcab).unwrap();
        assert_eq!(w.bridge, color("c"));
        assert!(is_extended_witness(&abcab, &w).unwrap());

        let abacb = parse_pattern("abacb").unwrap();
        let w = find_extended_witness(&abacb).unwrap();
        assert!(is_extended_witness(&abacb, &w).unwrap());

        // aba is already a 2-pattern; it is reported as such, not extended.
        assert!(find_extended_witness(&parse_pattern("aba").unwrap()).is_none());
        // abab has no single-edge class at all.
        assert!(find_extended_witness(&parse_pattern("abab").unwrap()).is_none());
    }

    #[test]
    fn augmentation_examples() {
        let tri = augment(&parse_pattern("aba").unwrap(), None).unwrap();
        assert_eq!(tri.system.point_count(), 6);
        assert_eq!(tri.system.block_count(), 3);
        let icycle3 = TripleSystem::from_triples(6, &[[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap();
        assert!(isomorphic(&tri.system, &icycle3).unwrap());

        let wicket = augment(&parse_pattern("abcab").unwrap(), Some(color("c"))).unwrap();
        assert_eq!(wicket.system.point_count(), 9);
        assert_eq!(wicket.system.block_count(), 5);
        assert!(wicket.system.is_linear());

        let d2 = augment(&parse_pattern("pqp,pq").unwrap(), None).unwrap();
        assert_eq!(d2.system.point_count(), 9);
        assert_eq!(d2.system.block_count(), 5);

        assert!(augment(&parse_pattern("abab").unwrap(), None).is_err());
        // abcab is not a 3-pattern, so plain augmentation must fail.
        assert!(augment(&parse_pattern("abcab").unwrap(), None).is_err());
    }

    #[test]
    fn augment_round_trip() {
        for text in ["aba", "abcba", "pqp,pq", "abcde", "0 1 p; 0 2 q; 0 3 r; 2 4 p; 5 6 q"] {
            let forest = parse_pattern(text).unwrap();
            let aug = augment(&forest, None).unwrap();
            assert!(aug.system.is_linear());
            // De-augment: blocks through each augmenting point reproduce the
            // color class exactly (forest vertices keep their ids).
            let mut edges = Vec::new();
            for (&c, &v) in &aug.augmenting {
                for b in aug.system.blocks() {
                    if b.contains(v) {
                        let rest: Vec<Point> =
                            b.points().iter().copied().filter(|&p| p != v).collect();
                        edges.push((rest[0], rest[1], c));
                    }
                }
            }
            let rebuilt = ColoredForest::new(forest.vertex_count(), edges).unwrap();
            let mut a = forest.edges().to_vec();
            let mut b = rebuilt.edges().to_vec();
            a.sort_by_key(|e| (e.u, e.v, e.color));
            b.sort_by_key(|e| (e.u, e.v, e.color));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn color_display_round_trip() {
        for id in [0, 5, 25, 26, 120] {
            let c = ColorId(id);
            assert_eq!(c.to_string().parse::<ColorId>().unwrap(), c);
        }
    }
}
