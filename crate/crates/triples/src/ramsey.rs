//! Block colorings of Steiner systems and monochromatic-copy censuses.
//!
//! A configuration is t-Ramsey when every t-coloring of the blocks of every
//! sufficiently large STS leaves a monochromatic copy. Desk-scale runs can
//! only gather evidence (the thresholds are far out of reach), so sampled
//! censuses report frequencies and never claim a theorem; the exhaustive
//! census is the one true verdict on a fixed small host.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::hill_climb_sts;
use crate::search::{embed, Embedding, SearchOptions};
use crate::system::TripleSystem;

/// A t-coloring of a host system's blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockColoring {
    t: usize,
    colors: Vec<usize>,
}

impl BlockColoring {
    pub fn new(host: &TripleSystem, t: usize, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != host.block_count() {
            return Err(Error::ColoringLength { expected: host.block_count(), got: colors.len() });
        }
        if let Some(&bad) = colors.iter().find(|&&c| c >= t) {
            return Err(Error::ColorOutOfRange(bad, t));
        }
        Ok(BlockColoring { t, colors })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn class_size(&self, color: usize) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    /// Block filter selecting one color class.
    pub fn class_filter(&self, color: usize) -> Vec<bool> {
        self.colors.iter().map(|&c| c == color).collect()
    }

    /// Size of the most frequent color class.
    pub fn majority_size(&self) -> usize {
        (0..self.t).map(|c| self.class_size(c)).max().unwrap_or(0)
    }
}

/// How to produce a coloring.
#[derive(Clone, Debug)]
pub enum ColoringStrategy {
    UniformRandom,
    /// Color blocks in random order, assigning each the first color that
    /// does not complete a monochromatic copy of the payload; fall back to
    /// the least-used color.
    GreedyAvoid(TripleSystem),
}

impl ColoringStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            ColoringStrategy::UniformRandom => "uniform",
            ColoringStrategy::GreedyAvoid(_) => "greedy_avoid",
        }
    }
}

/// Colors the blocks of a host. Deterministic for a given seed.
pub fn color_blocks(
    host: &TripleSystem,
    t: usize,
    strategy: &ColoringStrategy,
    seed: u64,
) -> Result<BlockColoring> {
    if t == 0 {
        return Err(Error::Unsupported("colorings need t >= 1".into()));
    }
    let m = host.block_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors = match strategy {
        ColoringStrategy::UniformRandom => (0..m).map(|_| rng.gen_range(0..t)).collect(),
        ColoringStrategy::GreedyAvoid(config) => {
            let mut order: Vec<usize> = (0..m).collect();
            order.shuffle(&mut rng);
            let mut colors = vec![usize::MAX; m];
            let mut sizes = vec![0usize; t];
            for &b in &order {
                let mut picked = None;
                for c in 0..t {
                    let mut filter: Vec<bool> =
                        colors.iter().map(|&col| col == c).collect();
                    filter[b] = true;
                    let hit =
                        embed(config, host, &SearchOptions::first().with_filter(filter))?;
                    if hit.embeddings.is_empty() {
                        picked = Some(c);
                        break;
                    }
                }
                let c = picked.unwrap_or_else(|| {
                    (0..t).min_by_key(|&c| (sizes[c], c)).expect("t >= 1")
                });
                colors[b] = c;
                sizes[c] += 1;
            }
            colors
        }
    };
    BlockColoring::new(host, t, colors)
}

/// First monochromatic copy of `config` in color order: runs the embedder
/// once per color class with the class as block filter.
pub fn mono_find(
    host: &TripleSystem,
    coloring: &BlockColoring,
    config: &TripleSystem,
) -> Result<Option<(usize, Embedding)>> {
    BlockColoring::new(host, coloring.t(), coloring.colors().to_vec())?;
    for c in 0..coloring.t() {
        let res =
            embed(config, host, &SearchOptions::first().with_filter(coloring.class_filter(c)))?;
        if let Some(e) = res.embeddings.into_iter().next() {
            return Ok(Some((c, e)));
        }
    }
    Ok(None)
}

/// One row of a census.
#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub n: usize,
    pub t: usize,
    pub config: String,
    pub strategy: String,
    /// Colorings examined (samples, or the scanned portion of the
    /// exhaustive space).
    pub samples: u64,
    pub with_mono: u64,
    /// Smallest majority-class size seen across samples.
    pub min_majority: usize,
    /// The counting bound n(n-1)/(6t) for STS hosts.
    pub majority_bound: f64,
    /// Exhaustive scans only: does every coloring have a mono copy?
    pub all_colorings_mono: Option<bool>,
}

/// Census output: evidence tables, never theorem claims.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub entries: Vec<CensusEntry>,
}

impl CensusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census reports serialize")
    }

    /// Aligned-column text table.
    pub fn to_table(&self) -> String {
        let header = ["n", "t", "config", "strategy", "samples", "mono", "min_maj", "bound", "all_mono"];
        let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for e in &self.entries {
            rows.push(vec![
                e.n.to_string(),
                e.t.to_string(),
                e.config.clone(),
                e.strategy.clone(),
                e.samples.to_string(),
                e.with_mono.to_string(),
                e.min_majority.to_string(),
                format!("{:.2}", e.majority_bound),
                match e.all_colorings_mono {
                    Some(true) => "yes".into(),
                    Some(false) => "no".into(),
                    None => "-".into(),
                },
            ]);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|i| rows.iter().map(|r| r[i].len()).max().unwrap_or(0))
            .collect();
        rows.iter()
            .map(|r| {
                r.iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

const EXHAUSTIVE_BOUND: u128 = 1 << 22;

/// Scans every t-coloring of the host's blocks (up to color permutation:
/// the first block's color is pinned) and reports whether each contains a
/// monochromatic copy of `config`. The full state space t^blocks must stay
/// within 2^22.
pub fn exhaustive_census(
    host: &TripleSystem,
    t: usize,
    config: &TripleSystem,
    config_name: &str,
) -> Result<CensusReport> {
    if t == 0 {
        return Err(Error::Unsupported("censuses need t >= 1".into()));
    }
    let m = host.block_count();
    let space = (t as u128).checked_pow(m as u32).ok_or(Error::StateSpace(u128::MAX, EXHAUSTIVE_BOUND))?;
    if space > EXHAUSTIVE_BOUND {
        return Err(Error::StateSpace(space, EXHAUSTIVE_BOUND));
    }
    // All copies of the configuration, as block-index sets.
    let all = embed(config, host, &SearchOptions::all())?;
    if all.truncated {
        return Err(Error::Internal("copy enumeration hit the node budget".into()));
    }
    let mut copies: Vec<Vec<usize>> = all
        .embeddings
        .iter()
        .map(|e| {
            let mut bs = e.block_map.clone();
            bs.sort_unstable();
            bs
        })
        .collect();
    copies.sort();
    copies.dedup();

    let mut colors = vec![0usize; m];
    let mut samples = 0u64;
    let mut with_mono = 0u64;
    let mut min_majority = usize::MAX;
    loop {
        samples += 1;
        let mono = copies
            .iter()
            .any(|copy| copy.iter().all(|&b| colors[copy[0]] == colors[b]));
        if mono {
            with_mono += 1;
        }
        let mut sizes = vec![0usize; t];
        for &c in &colors {
            sizes[c] += 1;
        }
        min_majority = min_majority.min(sizes.iter().copied().max().unwrap_or(0));

        // Advance the odometer, keeping block 0 pinned to color 0.
        let mut i = m;
        loop {
            if i <= 1 {
                i = 0;
                break;
            }
            i -= 1;
            colors[i] += 1;
            if colors[i] < t {
                break;
            }
            colors[i] = 0;
        }
        if i == 0 || m <= 1 {
            break;
        }
    }
    let n = host.point_count();
    Ok(CensusReport {
        entries: vec![CensusEntry {
            n,
            t,
            config: config_name.to_string(),
            strategy: "exhaustive".to_string(),
            samples,
            with_mono,
            min_majority: if min_majority == usize::MAX { 0 } else { min_majority },
            majority_bound: (n as f64 - 1.0) * n as f64 / (6.0 * t as f64),
            all_colorings_mono: Some(samples == with_mono),
        }],
    })
}

fn mix_seed(base: u64, salt: u64) -> u64 {
    // splitmix64 step
    let mut z = base.wrapping_add(salt.wrapping_mul(0x9E3779B97F4A7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Samples hill-climbed hosts and colorings for each order and strategy,
/// and aggregates monochromatic-copy frequencies. Evidence only. Samples
/// are independent (seeded per index), so `workers` > 1 splits them across
/// threads with a deterministic merge.
#[allow(clippy::too_many_arguments)]
pub fn sampled_census(
    config: &TripleSystem,
    config_name: &str,
    n_list: &[usize],
    t: usize,
    samples: u64,
    strategies: &[ColoringStrategy],
    seed: u64,
    workers: usize,
) -> Result<CensusReport> {
    if t == 0 {
        return Err(Error::Unsupported("censuses need t >= 1".into()));
    }
    for &n in n_list {
        if !crate::system::admissible(n) {
            return Err(Error::Inadmissible(n));
        }
    }
    let mut entries = Vec::new();
    for &n in n_list {
        for strategy in strategies {
            let one = |i: u64| -> Result<(bool, usize)> {
                let host = hill_climb_sts(n, mix_seed(seed, i * 2 + 1), 10_000_000)?;
                let coloring = color_blocks(&host, t, strategy, mix_seed(seed, i * 2 + 2))?;
                let mono = mono_find(&host, &coloring, config)?.is_some();
                Ok((mono, coloring.majority_size()))
            };
            let results: Vec<(bool, usize)> = if workers > 1 && samples > 1 {
                let mut out: Vec<Option<(bool, usize)>> = vec![None; samples as usize];
                let chunk = samples.div_ceil(workers as u64) as usize;
                std::thread::scope(|scope| -> Result<()> {
                    let mut handles = Vec::new();
                    for (w, slot) in out.chunks_mut(chunk).enumerate() {
                        let start = (w * chunk) as u64;
                        handles.push(scope.spawn(move || -> Result<()> {
                            for (j, s) in slot.iter_mut().enumerate() {
                                *s = Some(one(start + j as u64)?);
                            }
                            Ok(())
                        }));
                    }
                    for h in handles {
                        h.join().expect("census worker does not panic")?;
                    }
                    Ok(())
                })?;
                out.into_iter().map(|s| s.expect("all samples filled")).collect()
            } else {
                (0..samples).map(one).collect::<Result<Vec<_>>>()?
            };
            let with_mono = results.iter().filter(|r| r.0).count() as u64;
            let min_majority = results.iter().map(|r| r.1).min().unwrap_or(0);
            entries.push(CensusEntry {
                n,
                t,
                config: config_name.to_string(),
                strategy: strategy.name().to_string(),
                samples,
                with_mono,
                min_majority,
                majority_bound: (n as f64 - 1.0) * n as f64 / (6.0 * t as f64),
                all_colorings_mono: None,
            });
        }
    }
    Ok(CensusReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{i_cycle, triangle, wicket};
    use crate::generators::{bose, fano};
    use crate::search::contains;

    #[test]
    fn coloring_basics() {
        let f = fano();
        let c = color_blocks(&f, 1, &ColoringStrategy::UniformRandom, 5).unwrap();
        assert_eq!(c.colors(), &[0; 7]);
        assert_eq!(c.majority_size(), 7);

        let c2a = color_blocks(&f, 2, &ColoringStrategy::UniformRandom, 5).unwrap();
        let c2b = color_blocks(&f, 2, &ColoringStrategy::UniformRandom, 5).unwrap();
        assert_eq!(c2a, c2b); // determinism

        assert!(BlockColoring::new(&f, 2, vec![0, 1]).is_err());
        assert!(BlockColoring::new(&f, 2, vec![2; 7]).is_err());
    }

    #[test]
    fn mono_find_at_t1_is_containment() {
        let host = bose(9).unwrap();
        let all_one = color_blocks(&host, 1, &ColoringStrategy::UniformRandom, 0).unwrap();
        for config in [triangle(), wicket(), i_cycle(4).unwrap()] {
            let hit = mono_find(&host, &all_one, &config).unwrap();
            assert_eq!(hit.is_some(), contains(&config, &host).unwrap());
            if let Some((color, emb)) = hit {
                assert_eq!(color, 0);
                assert!(emb.validate(&config, &host));
            }
        }
    }

    #[test]
    fn exhaustive_census_on_fano() {
        let f = fano();
        let single = TripleSystem::from_triples(3, &[[0, 1, 2]]).unwrap();
        let r = exhaustive_census(&f, 2, &single, "single").unwrap();
        let e = &r.entries[0];
        assert_eq!(e.samples, 64); // 2^6 with block 0 pinned
        assert_eq!(e.all_colorings_mono, Some(true)); // pigeonhole on 7 blocks
        assert!(e.min_majority >= 4);

        let rt = exhaustive_census(&f, 2, &triangle(), "triangle").unwrap();
        // Any four blocks of the Fano plane contain a triangle, and one
        // class always has four blocks.
        assert_eq!(rt.entries[0].all_colorings_mono, Some(true));
    }

    #[test]
    fn exhaustive_census_is_monotone_on_fano() {
        // single block embeds in the triangle, so mono-triangle everywhere
        // implies mono-single-block everywhere.
        let f = fano();
        let single = TripleSystem::from_triples(3, &[[0, 1, 2]]).unwrap();
        let rt = exhaustive_census(&f, 2, &triangle(), "triangle").unwrap();
        let rs = exhaustive_census(&f, 2, &single, "single").unwrap();
        if rt.entries[0].all_colorings_mono == Some(true) {
            assert_eq!(rs.entries[0].all_colorings_mono, Some(true));
        }
    }

    #[test]
    fn state_space_bound_enforced() {
        let host = bose(21).unwrap(); // 70 blocks
        assert!(matches!(
            exhaustive_census(&host, 2, &triangle(), "triangle"),
            Err(Error::StateSpace(..))
        ));
    }

    #[test]
    fn sampled_census_reports_bound() {
        let report = sampled_census(
            &triangle(),
            "triangle",
            &[9, 13],
            2,
            4,
            &[ColoringStrategy::UniformRandom],
            7,
            1,
        )
        .unwrap();
        assert_eq!(report.entries.len(), 2);
        for e in &report.entries {
            assert_eq!(e.samples, 4);
            assert!(e.min_majority as f64 >= e.majority_bound);
        }
        let table = report.to_table();
        assert!(table.contains("triangle"));

        // Worker-split agrees with sequential.
        let parallel = sampled_census(
            &triangle(),
            "triangle",
            &[9, 13],
            2,
            4,
            &[ColoringStrategy::UniformRandom],
            7,
            3,
        )
        .unwrap();
        assert_eq!(report.to_json(), parallel.to_json());
    }

    #[test]
    fn greedy_avoid_runs() {
        let host = bose(9).unwrap();
        let strat = ColoringStrategy::GreedyAvoid(triangle());
        let c = color_blocks(&host, 2, &strat, 11).unwrap();
        assert_eq!(c.colors().len(), 12);
        let c2 = color_blocks(&host, 2, &strat, 11).unwrap();
        assert_eq!(c, c2);
    }
}
