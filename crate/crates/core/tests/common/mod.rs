//! Seeded random instances shared by the integration tests and the
//! acceptance suite.
#![allow(dead_code)]

use interleave_core::staircase::{Ambient, Generator, Staircase};
use interleave_core::{
    Bar, Barcode, Ext, Formigram, GridClustering, GroundSet, Metric, RFiltration, Rat,
    SubPartition,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with denominator 1 or 2 in `[lo, hi]`.
pub fn half_int(rng: &mut TestRng, lo: i64, hi: i64) -> Rat {
    Rat::new(rng.gen_range(2 * lo..=2 * hi), 2)
}

pub fn subpartition(rng: &mut TestRng, ground: &GroundSet) -> SubPartition {
    let n = ground.len();
    let labels: Vec<Option<usize>> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.25) {
                None
            } else {
                Some(rng.gen_range(0..n))
            }
        })
        .collect();
    SubPartition::from_labels(ground, &labels)
}

/// `count` distinct sorted rationals in `[lo, hi]`.
pub fn distinct_sorted(rng: &mut TestRng, count: usize, lo: i64, hi: i64) -> Vec<Rat> {
    let mut pool: Vec<Rat> = (2 * lo..=2 * hi).map(|k| Rat::new(k, 2)).collect();
    pool.shuffle(rng);
    let mut out: Vec<Rat> = pool.into_iter().take(count).collect();
    out.sort();
    out
}

/// A valid formigram with `m` critical points: random open values, and
/// point values at least the join of their neighbours.
pub fn formigram(rng: &mut TestRng, ground: &GroundSet, m: usize) -> Formigram {
    let crit = distinct_sorted(rng, m, -6, 6);
    formigram_with_crit(rng, ground, crit)
}

/// As [`formigram`], with critical points at `0, 1, ..., m - 1`.
pub fn formigram_dense(rng: &mut TestRng, ground: &GroundSet, m: usize) -> Formigram {
    let crit = (0..m as i64).map(Rat::int).collect();
    formigram_with_crit(rng, ground, crit)
}

/// A random formigram with the same values as `theta` near `±∞`, so the
/// two are at finite distance.
pub fn formigram_like(rng: &mut TestRng, theta: &Formigram, m: usize) -> Formigram {
    let crit = distinct_sorted(rng, m, -6, 6);
    let values = theta.values();
    let tails = (values[0].clone(), values[values.len() - 1].clone());
    build_formigram(rng, theta.ground(), crit, Some(tails))
}

fn formigram_with_crit(rng: &mut TestRng, ground: &GroundSet, crit: Vec<Rat>) -> Formigram {
    build_formigram(rng, ground, crit, None)
}

fn build_formigram(
    rng: &mut TestRng,
    ground: &GroundSet,
    crit: Vec<Rat>,
    tails: Option<(SubPartition, SubPartition)>,
) -> Formigram {
    let m = crit.len();
    let mut open: Vec<SubPartition> = (0..=m).map(|_| subpartition(rng, ground)).collect();
    if let Some((first, last)) = tails {
        if m == 0 {
            open[0] = first.join(&last).unwrap();
            if first != last {
                // A constant cannot match two different tails; add a point.
                return build_formigram(rng, ground, vec![Rat::zero()], Some((first, last)));
            }
        } else {
            open[0] = first;
            open[m] = last;
        }
    }
    let mut values = vec![open[0].clone()];
    for i in 0..m {
        let mut point = open[i].join(&open[i + 1]).unwrap();
        if rng.gen_bool(0.3) {
            point = point.join(&subpartition(rng, ground)).unwrap();
        }
        values.push(point);
        values.push(open[i + 1].clone());
    }
    let f = Formigram::new(ground, crit, values).unwrap();
    assert!(f.validate().is_ok());
    f
}

/// A metric with positive off-diagonal integer entries.
pub fn metric(rng: &mut TestRng, ground: &GroundSet) -> Metric {
    let n = ground.len();
    let mut d = vec![vec![Rat::zero(); n]; n];
    for x in 0..n {
        for y in x + 1..n {
            let v = Rat::int(rng.gen_range(1..=9));
            d[x][y] = v.clone();
            d[y][x] = v;
        }
    }
    Metric::new(ground, d).unwrap()
}

pub fn barcode(rng: &mut TestRng, max_bars: usize) -> Barcode {
    let k = rng.gen_range(0..=max_bars);
    let bars = (0..k)
        .map(|_| {
            let birth = half_int(rng, -4, 4);
            if rng.gen_bool(0.15) {
                Bar::infinite(birth)
            } else {
                let death = birth.clone() + half_int(rng, 0, 5);
                Bar::finite(birth, death).unwrap()
            }
        })
        .collect();
    Barcode::new(bars)
}

/// A valid filtration on `n` vertices: births increase along faces and
/// some edges and triangles never appear.
pub fn rfiltration(rng: &mut TestRng, n: usize) -> RFiltration {
    let ground = GroundSet::indexed(n);
    let mut births: Vec<Option<Rat>> = vec![None; 1 << n];
    for mask in 1usize..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if verts.len() == 1 {
            births[mask] = Some(half_int(rng, 0, 3));
            continue;
        }
        let faces: Option<Vec<Rat>> = verts
            .iter()
            .map(|v| births[mask & !(1 << v)].clone())
            .collect();
        if let Some(faces) = faces {
            if rng.gen_bool(0.8) {
                let top = faces.into_iter().max().unwrap();
                births[mask] = Some(top + half_int(rng, 0, 3));
            }
        }
    }
    let simplices = births
        .into_iter()
        .enumerate()
        .filter_map(|(mask, b)| b.map(|b| ((0..n).filter(|v| mask >> v & 1 == 1).collect(), b)))
        .collect();
    let f = RFiltration::new(&ground, simplices).unwrap();
    assert!(f.validate().is_ok());
    f
}

fn coordinate(rng: &mut TestRng, inf: Ext) -> Ext {
    if rng.gen_bool(0.1) {
        inf
    } else {
        Ext::Fin(half_int(rng, -5, 5))
    }
}

pub fn staircase(rng: &mut TestRng, ambient: Ambient, max_gens: usize) -> Staircase {
    let k = rng.gen_range(0..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let l = coordinate(rng, Ext::PosInf);
            let r = coordinate(rng, Ext::NegInf);
            Generator::new(l, r).unwrap()
        })
        .collect();
    Staircase::normalize(gens, ambient)
}

/// An order-preserving grid: every cell is the join of its left and lower
/// neighbours, sometimes joined with a random atom or pair.
pub fn grid(rng: &mut TestRng, ground: &GroundSet, max_cuts: usize) -> GridClustering {
    let n = ground.len();
    let (kx, ky) = (rng.gen_range(0..=max_cuts), rng.gen_range(0..=max_cuts));
    let x_cuts = distinct_sorted(rng, kx, -4, 4);
    let y_cuts = distinct_sorted(rng, ky, -4, 4);
    let (rows, cols) = (y_cuts.len() + 1, x_cuts.len() + 1);
    let mut cells: Vec<Vec<SubPartition>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row: Vec<SubPartition> = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut v = SubPartition::empty(ground);
            if i > 0 {
                v = v.join(&cells[i - 1][j]).unwrap();
            }
            if j > 0 {
                v = v.join(&row[j - 1]).unwrap();
            }
            if rng.gen_bool(0.35) {
                let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let part = if x == y {
                    SubPartition::singleton(ground, x)
                } else {
                    SubPartition::pair(ground, x, y)
                };
                v = v.join(&part).unwrap();
            }
            row.push(v);
        }
        cells.push(row);
    }
    GridClustering::new(ground, x_cuts, y_cuts, cells).unwrap()
}

/// `g` with every cut moved by a random amount in `[-1, 1]`, keeping the
/// cell values, so the two are at finite distance.
pub fn grid_perturbed(rng: &mut TestRng, g: &GridClustering) -> GridClustering {
    loop {
        let mut shift = |cuts: &[Rat]| -> Vec<Rat> {
            cuts.iter().map(|c| c.clone() + half_int(rng, -1, 1)).collect()
        };
        let (xs, ys) = (shift(g.x_cuts()), shift(g.y_cuts()));
        if let Ok(p) = GridClustering::new(g.ground(), xs, ys, g.cells().to_vec()) {
            return p;
        }
    }
}
