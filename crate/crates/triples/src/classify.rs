//! Classifying configurations: which ones arise by augmenting a pattern?
//!
//! The inverse problem of augmentation. A candidate augmenting set S picks
//! exactly one point from every block; removing the chosen point from each
//! of its blocks leaves a colored graph (one color per point of S), and the
//! configuration is an s-configuration exactly when some S yields a forest
//! admitting a matching order. Extended s-configurations additionally route
//! one single-edge color class through the bridge trial.

use std::collections::BTreeMap;

use serde_json::json;

use crate::catalog::i_cycle;
use crate::error::{Error, Result};
use crate::patterns::{
    find_extended_witness, find_pattern_order, is_extended_witness, is_s_pattern, ColorId,
    ColoredForest, ExtendedWitness,
};
use crate::search::contains;
use crate::system::{Point, TripleSystem};

/// A certificate that a configuration is an (extended) s-configuration:
/// the augmenting point per color class, the de-augmented forest (with its
/// vertex relabeling back to configuration points), a matching order, and
/// the bridge color in the extended case.
#[derive(Clone, Debug)]
pub struct AugmentationWitness {
    /// Augmenting point (a configuration point) per color class.
    pub augmenting: BTreeMap<ColorId, Point>,
    /// Matching order over the non-bridge colors.
    pub order: Vec<ColorId>,
    /// Bridge color for extended witnesses.
    pub bridge: Option<ColorId>,
    /// The de-augmented forest, densely relabeled.
    pub forest: ColoredForest,
    /// Map from forest vertex to configuration point.
    pub forest_vertices: Vec<Point>,
}

impl AugmentationWitness {
    /// Number of matchings in the underlying pattern (bridge excluded).
    pub fn s(&self) -> usize {
        self.order.len()
    }

    /// Independent re-validation against the configuration: the augmenting
    /// points must partition the blocks, the de-augmented edges must
    /// rebuild the stored forest exactly, and the order (plus bridge, when
    /// present) must certify the pattern property.
    pub fn validate_against(&self, cfg: &TripleSystem) -> bool {
        if cfg.require_linear().is_err() || cfg.require_configuration().is_err() {
            return false;
        }
        let n = cfg.point_count();
        let mut color_of = vec![None; n];
        for (&c, &p) in &self.augmenting {
            if p >= n || color_of[p].is_some() {
                return false;
            }
            color_of[p] = Some(c);
        }
        // Forest vertices are exactly the non-augmenting points.
        let expected: Vec<Point> =
            (0..n).filter(|&p| color_of[p].is_none()).collect();
        if self.forest_vertices != expected {
            return false;
        }
        if self.forest.vertex_count() != expected.len() {
            return false;
        }
        let mut vertex_of = vec![usize::MAX; n];
        for (v, &p) in self.forest_vertices.iter().enumerate() {
            vertex_of[p] = v;
        }
        // De-augment: every block must contain exactly one augmenting point.
        let mut edges: Vec<(usize, usize, ColorId)> = Vec::new();
        for b in cfg.blocks() {
            let chosen: Vec<Point> =
                b.points().iter().copied().filter(|&p| color_of[p].is_some()).collect();
            if chosen.len() != 1 {
                return false;
            }
            let rest: Vec<Point> =
                b.points().iter().copied().filter(|&p| p != chosen[0]).collect();
            edges.push((
                vertex_of[rest[0]],
                vertex_of[rest[1]],
                color_of[chosen[0]].expect("chosen point has a color"),
            ));
        }
        let mut rebuilt: Vec<(usize, usize, ColorId)> = edges
            .iter()
            .map(|&(u, v, c)| (u.min(v), u.max(v), c))
            .collect();
        rebuilt.sort_unstable_by_key(|&(u, v, c)| (u, v, c));
        let mut stored: Vec<(usize, usize, ColorId)> =
            self.forest.edges().iter().map(|e| (e.u, e.v, e.color)).collect();
        stored.sort_unstable_by_key(|&(u, v, c)| (u, v, c));
        if rebuilt != stored {
            return false;
        }
        match self.bridge {
            None => is_s_pattern(&self.forest, &self.order).unwrap_or(false),
            Some(b) => {
                if !self.augmenting.contains_key(&b) || self.order.contains(&b) {
                    return false;
                }
                let w = ExtendedWitness { bridge: b, order: self.order.clone() };
                is_extended_witness(&self.forest, &w).unwrap_or(false)
            }
        }
    }

    /// Serialization used by the CLI: colors keyed by display name.
    pub fn to_json(&self) -> String {
        let augmenting: BTreeMap<String, Point> =
            self.augmenting.iter().map(|(c, &p)| (c.to_string(), p)).collect();
        let order: Vec<String> = self.order.iter().map(|c| c.to_string()).collect();
        json!({
            "augmenting": augmenting,
            "order": order,
            "bridge": self.bridge.map(|b| b.to_string()),
        })
        .to_string()
    }
}

/// Which witness shape to search for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassifyMode {
    Plain,
    Extended,
}

/// Outcome of the classification search. The negative is certified by
/// exhausting every candidate augmenting set.
#[derive(Clone, Debug)]
pub enum Classification {
    Witness(AugmentationWitness),
    ExhaustiveNone { candidates_examined: usize },
}

impl Classification {
    pub fn witness(&self) -> Option<&AugmentationWitness> {
        match self {
            Classification::Witness(w) => Some(w),
            Classification::ExhaustiveNone { .. } => None,
        }
    }
}

struct HittingSearch<'a> {
    cfg: &'a TripleSystem,
    in_s: Vec<bool>,
    excluded: Vec<u32>,
    blocks_through: Vec<Vec<usize>>,
    found: Vec<Vec<Point>>,
}

impl<'a> HittingSearch<'a> {
    fn chosen_in(&self, block_idx: usize) -> usize {
        self.cfg.blocks()[block_idx].points().iter().filter(|&&p| self.in_s[p]).count()
    }

    fn rec(&mut self, block_idx: usize) {
        if block_idx == self.cfg.block_count() {
            let set: Vec<Point> =
                (0..self.cfg.point_count()).filter(|&p| self.in_s[p]).collect();
            self.found.push(set);
            return;
        }
        match self.chosen_in(block_idx) {
            1 => self.rec(block_idx + 1),
            0 => {
                let pts = self.cfg.blocks()[block_idx].points();
                for p in pts {
                    if self.excluded[p] > 0 || self.in_s[p] {
                        continue;
                    }
                    // Choosing p commits every block through p to p; their
                    // other points can no longer join S.
                    let conflict = self.blocks_through[p].iter().any(|&bi| {
                        self.cfg.blocks()[bi].points().iter().any(|&q| q != p && self.in_s[q])
                    });
                    if conflict {
                        continue;
                    }
                    self.in_s[p] = true;
                    for &bi in &self.blocks_through[p] {
                        for q in self.cfg.blocks()[bi].points() {
                            if q != p {
                                self.excluded[q] += 1;
                            }
                        }
                    }
                    self.rec(block_idx + 1);
                    for &bi in &self.blocks_through[p] {
                        for q in self.cfg.blocks()[bi].points() {
                            if q != p {
                                self.excluded[q] -= 1;
                            }
                        }
                    }
                    self.in_s[p] = false;
                }
            }
            _ => {} // two chosen points in one block: dead branch
        }
    }
}

/// Every candidate augmenting set: a point selection hitting each block
/// exactly once such that no selected point ever occurs in a block as a
/// non-selected point.
fn augmenting_candidates(cfg: &TripleSystem) -> Vec<Vec<Point>> {
    let mut through = vec![Vec::new(); cfg.point_count()];
    for (i, b) in cfg.blocks().iter().enumerate() {
        for p in b.points() {
            through[p].push(i);
        }
    }
    let mut search = HittingSearch {
        cfg,
        in_s: vec![false; cfg.point_count()],
        excluded: vec![0; cfg.point_count()],
        blocks_through: through,
        found: Vec::new(),
    };
    search.rec(0);
    // Fewest colors first (so reported witnesses use the smallest s),
    // lexicographically smallest set on ties.
    search.found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    search.found
}

fn witness_for_set(
    cfg: &TripleSystem,
    s_points: &[Point],
    mode: ClassifyMode,
) -> Option<AugmentationWitness> {
    let n = cfg.point_count();
    let mut color_of = vec![None; n];
    let mut augmenting = BTreeMap::new();
    for (i, &p) in s_points.iter().enumerate() {
        let c = ColorId(i as u32);
        color_of[p] = Some(c);
        augmenting.insert(c, p);
    }
    let forest_vertices: Vec<Point> = (0..n).filter(|&p| color_of[p].is_none()).collect();
    let mut vertex_of = vec![usize::MAX; n];
    for (v, &p) in forest_vertices.iter().enumerate() {
        vertex_of[p] = v;
    }
    let mut edges = Vec::new();
    for b in cfg.blocks() {
        let chosen = b
            .points()
            .iter()
            .copied()
            .find(|&p| color_of[p].is_some())
            .expect("hitting sets cover every block");
        let rest: Vec<Point> = b.points().iter().copied().filter(|&p| p != chosen).collect();
        edges.push((
            vertex_of[rest[0]],
            vertex_of[rest[1]],
            color_of[chosen].expect("chosen point has a color"),
        ));
    }
    // Linearity rules out repeated edges and improper classes; only a
    // cycle can reject the candidate here.
    let forest = ColoredForest::new(forest_vertices.len(), edges).ok()?;
    match mode {
        ClassifyMode::Plain => find_pattern_order(&forest).map(|order| AugmentationWitness {
            augmenting,
            order,
            bridge: None,
            forest: forest.clone(),
            forest_vertices,
        }),
        ClassifyMode::Extended => find_extended_witness(&forest).map(|w| AugmentationWitness {
            augmenting,
            order: w.order,
            bridge: Some(w.bridge),
            forest: forest.clone(),
            forest_vertices,
        }),
    }
}

/// Searches for an (extended) s-configuration witness over every candidate
/// augmenting set. Candidates are tried smallest first (then in
/// lexicographic order), so the first witness found uses as few matchings
/// as possible; the negative case is certified by exhaustion.
pub fn classify_configuration(cfg: &TripleSystem, mode: ClassifyMode) -> Result<Classification> {
    cfg.require_linear()?;
    cfg.require_configuration()?;
    let candidates = augmenting_candidates(cfg);
    let total = candidates.len();
    for set in &candidates {
        if let Some(w) = witness_for_set(cfg, set, mode) {
            debug_assert!(w.validate_against(cfg));
            return Ok(Classification::Witness(w));
        }
    }
    Ok(Classification::ExhaustiveNone { candidates_examined: total })
}

/// Inductive route: repeatedly peel a block with at least two points of
/// degree one. Succeeds exactly on acyclic configurations.
pub fn is_acyclic_by_peeling(cfg: &TripleSystem) -> bool {
    let mut alive: Vec<bool> = vec![true; cfg.block_count()];
    let mut remaining = cfg.block_count();
    while remaining > 0 {
        let mut degree = vec![0usize; cfg.point_count()];
        for (i, b) in cfg.blocks().iter().enumerate() {
            if alive[i] {
                for p in b.points() {
                    degree[p] += 1;
                }
            }
        }
        let peelable = (0..cfg.block_count()).find(|&i| {
            alive[i]
                && cfg.blocks()[i].points().iter().filter(|&&p| degree[p] == 1).count() >= 2
        });
        match peelable {
            Some(i) => {
                alive[i] = false;
                remaining -= 1;
            }
            None => return false,
        }
    }
    true
}

/// Search route: an embedded i-cycle for some 3 <= i <= block count.
pub fn contains_embedded_cycle(cfg: &TripleSystem) -> Result<bool> {
    for i in 3..=cfg.block_count() {
        if 2 * i > cfg.point_count() {
            continue;
        }
        if contains(&i_cycle(i)?, cfg)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Acyclicity, computed by both the inductive peeling route and the
/// i-cycle search route; the two must agree.
pub fn is_acyclic_configuration(cfg: &TripleSystem) -> Result<bool> {
    cfg.require_linear()?;
    let peel = is_acyclic_by_peeling(cfg);
    let cycle_free = !contains_embedded_cycle(cfg)?;
    if peel != cycle_free {
        return Err(Error::Internal(format!(
            "acyclicity routes disagree: peeling={peel}, cycle-free={cycle_free}"
        )));
    }
    Ok(peel)
}

/// True iff every block contains a point of degree one.
pub fn is_graph_like(cfg: &TripleSystem) -> Result<bool> {
    cfg.require_configuration()?;
    let degree = cfg.degrees();
    Ok(cfg.blocks().iter().all(|b| b.points().iter().any(|&p| degree[p] == 1)))
}

/// Builds an s-configuration witness for an acyclic configuration by
/// induction on a peeling order: re-adding a block {x, y, z} whose y, z
/// are fresh either extends the color class augmented by x (when x is an
/// augmenting point) with the edge yz, or opens a new first color with
/// edge xy and augmenting point z.
pub fn acyclic_to_witness(cfg: &TripleSystem) -> Result<AugmentationWitness> {
    cfg.require_linear()?;
    cfg.require_configuration()?;
    if !is_acyclic_configuration(cfg)? {
        return Err(Error::Unsupported("configuration contains a cycle".into()));
    }
    // Peeling order, lowest-index eligible block first.
    let mut alive = vec![true; cfg.block_count()];
    let mut peel_order = Vec::with_capacity(cfg.block_count());
    for _ in 0..cfg.block_count() {
        let mut degree = vec![0usize; cfg.point_count()];
        for (i, b) in cfg.blocks().iter().enumerate() {
            if alive[i] {
                for p in b.points() {
                    degree[p] += 1;
                }
            }
        }
        let i = (0..cfg.block_count())
            .find(|&i| {
                alive[i]
                    && cfg.blocks()[i].points().iter().filter(|&&p| degree[p] == 1).count()
                        >= 2
            })
            .expect("acyclic configurations always have a peelable block");
        alive[i] = false;
        peel_order.push(i);
    }

    // Rebuild in reverse peeling order.
    let mut present = vec![false; cfg.point_count()];
    let mut color_of_aug: Vec<Option<ColorId>> = vec![None; cfg.point_count()];
    let mut augmenting: BTreeMap<ColorId, Point> = BTreeMap::new();
    let mut edges: Vec<(Point, Point, ColorId)> = Vec::new();
    let mut order: Vec<ColorId> = Vec::new();
    let mut next_color = 0u32;
    for &bi in peel_order.iter().rev() {
        let pts = cfg.blocks()[bi].points();
        let existing: Vec<Point> = pts.iter().copied().filter(|&p| present[p]).collect();
        debug_assert!(existing.len() <= 1);
        let fresh: Vec<Point> = pts.iter().copied().filter(|&p| !present[p]).collect();
        match existing.first() {
            Some(&x) if color_of_aug[x].is_some() => {
                // x already augments a class; the new edge joins it.
                let c = color_of_aug[x].expect("checked above");
                edges.push((fresh[0], fresh[1], c));
            }
            anchor => {
                // New color, placed first in the order: its edge keeps a
                // vertex never touched later, and earlier classes never
                // look at it.
                let c = ColorId(next_color);
                next_color += 1;
                let (u, v, aug) = match anchor {
                    Some(&x) => (x, fresh[0], fresh[1]),
                    None => (fresh[0], fresh[1], fresh[2]),
                };
                edges.push((u, v, c));
                augmenting.insert(c, aug);
                color_of_aug[aug] = Some(c);
                order.insert(0, c);
            }
        }
        for p in pts {
            present[p] = true;
        }
    }

    let forest_vertices: Vec<Point> =
        (0..cfg.point_count()).filter(|&p| color_of_aug[p].is_none()).collect();
    let mut vertex_of = vec![usize::MAX; cfg.point_count()];
    for (v, &p) in forest_vertices.iter().enumerate() {
        vertex_of[p] = v;
    }
    let relabeled: Vec<(usize, usize, ColorId)> =
        edges.iter().map(|&(u, v, c)| (vertex_of[u], vertex_of[v], c)).collect();
    let forest = ColoredForest::new(forest_vertices.len(), relabeled)?;
    let witness =
        AugmentationWitness { augmenting, order, bridge: None, forest, forest_vertices };
    if !witness.validate_against(cfg) {
        return Err(Error::Internal("constructed witness failed re-validation".into()));
    }
    Ok(witness)
}
