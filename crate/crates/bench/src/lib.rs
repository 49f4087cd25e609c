//! Deterministic inputs for the benchmarks.

use interleave_core::staircase::{Ambient, Generator, Staircase};
use interleave_core::{Bar, Barcode, Ext, Formigram, GroundSet, Rat, SubPartition};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn half_int(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    Rat::new(rng.gen_range(2 * lo..=2 * hi), 2)
}

fn subpartition(rng: &mut ChaCha8Rng, ground: &GroundSet) -> SubPartition {
    let n = ground.len();
    let labels: Vec<Option<usize>> = (0..n)
        .map(|_| if rng.gen_bool(0.2) { None } else { Some(rng.gen_range(0..n)) })
        .collect();
    SubPartition::from_labels(ground, &labels)
}

/// A valid formigram on `n` points with `m` critical points, whose values
/// near `-∞` and `+∞` are empty and whole, so any two are at finite
/// distance.
pub fn formigram(seed: u64, n: usize, m: usize) -> Formigram {
    let mut rng = rng(seed);
    let ground = GroundSet::indexed(n);
    let mut pool: Vec<Rat> = (-4 * m as i64..=4 * m as i64).map(|k| Rat::new(k, 2)).collect();
    pool.shuffle(&mut rng);
    let mut crit: Vec<Rat> = pool.into_iter().take(m).collect();
    crit.sort();
    let mut open: Vec<SubPartition> = (0..=m).map(|_| subpartition(&mut rng, &ground)).collect();
    open[0] = SubPartition::empty(&ground);
    open[m] = SubPartition::whole(&ground);
    let mut values = vec![open[0].clone()];
    for i in 0..m {
        values.push(open[i].join(&open[i + 1]).expect("same ground"));
        values.push(open[i + 1].clone());
    }
    Formigram::new(&ground, crit, values).expect("valid by construction")
}

pub fn barcode(seed: u64, bars: usize) -> Barcode {
    let mut rng = rng(seed);
    let bars = (0..bars)
        .map(|_| {
            let birth = half_int(&mut rng, -20, 20);
            let death = birth.clone() + half_int(&mut rng, 0, 10);
            Bar::finite(birth, death).expect("death after birth")
        })
        .collect();
    Barcode::new(bars)
}

pub fn staircase(seed: u64, ambient: Ambient, gens: usize) -> Staircase {
    let mut rng = rng(seed);
    let gens = (0..gens)
        .map(|_| {
            let l = Ext::Fin(half_int(&mut rng, -30, 30));
            let r = Ext::Fin(half_int(&mut rng, -30, 30));
            Generator::new(l, r).expect("finite generator")
        })
        .collect();
    Staircase::normalize(gens, ambient)
}
