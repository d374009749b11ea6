//! Scalene Heronian triangles from pairs of Pythagorean triangles glued
//! along a common leg.

use std::collections::{BTreeMap, BTreeSet};

use coaxal_core::ExactTriangle;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest leg of the Pythagorean triangles used for gluing.
const MAX_LEG: i64 = 60;

/// Right triangles by leg: `leg -> [(other_leg, hypotenuse)]`.
fn right_triangles_by_leg(max_leg: i64) -> BTreeMap<i64, Vec<(i64, i64)>> {
    let mut out: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    let mut m = 2;
    while m * m - (m - 1) * (m - 1) <= max_leg {
        for n in 1..m {
            if (m - n) % 2 == 0 || m.gcd(&n) != 1 {
                continue;
            }
            let (x, y, h) = (m * m - n * n, 2 * m * n, m * m + n * n);
            let mut k = 1;
            while k * x.min(y) <= max_leg {
                for (leg, other) in [(k * x, k * y), (k * y, k * x)] {
                    if leg <= max_leg {
                        out.entry(leg).or_default().push((other, k * h));
                    }
                }
                k += 1;
            }
        }
        m += 1;
    }
    out
}

/// Sides `(hyp₁, hyp₂, other₁ + other₂)` of every gluing, reduced by their
/// gcd, scalene, sorted ascending and deduplicated.
pub fn glued_triangles(max_leg: i64) -> Vec<[i64; 3]> {
    let mut seen = BTreeSet::new();
    for rights in right_triangles_by_leg(max_leg).values() {
        for (i, &(o1, h1)) in rights.iter().enumerate() {
            for &(o2, h2) in &rights[i..] {
                let mut s = [h1, h2, o1 + o2];
                let g = s[0].gcd(&s[1]).gcd(&s[2]);
                s.iter_mut().for_each(|x| *x /= g);
                s.sort_unstable();
                if s[0] != s[1] && s[1] != s[2] {
                    seen.insert(s);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Rational area check by Heron's formula.
pub fn is_heronian(s: [i64; 3]) -> bool {
    ExactTriangle::from_int_sides(s[0], s[1], s[2]).map(|t| t.area().is_ok()).unwrap_or(false)
}

/// A seeded, shuffled pool of distinct scalene Heronian triangles. Each
/// triangle's vertex labelling is shuffled as well.
#[derive(Clone, Debug)]
pub struct HeronianGenerator {
    pool: Vec<[i64; 3]>,
}

impl HeronianGenerator {
    pub fn new(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pool = glued_triangles(MAX_LEG);
        pool.shuffle(&mut rng);
        for s in &mut pool {
            s.shuffle(&mut rng);
        }
        HeronianGenerator { pool }
    }

    pub fn len(&self) -> usize {
        self.pool.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pool.is_empty()
    }

    /// The `i`-th triangle, cycling through the pool.
    pub fn get(&self, i: usize) -> [i64; 3] {
        self.pool[i % self.pool.len()]
    }

    pub fn take(&self, n: usize) -> Vec<[i64; 3]> {
        self.pool.iter().copied().cycle().take(n).collect()
    }
}

pub fn generate_heronian(seed: u64, n: usize) -> Vec<[i64; 3]> {
    HeronianGenerator::new(seed).take(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen_fourteen_fifteen_from_common_leg_twelve() {
        assert!(glued_triangles(MAX_LEG).contains(&[13, 14, 15]));
        let t = ExactTriangle::from_int_sides(13, 14, 15).unwrap();
        assert_eq!(t.area().unwrap(), coaxal_core::Exact::from_integer(84.into()));
    }

    #[test]
    fn pool_is_heronian_scalene_and_distinct() {
        let g = HeronianGenerator::new(3);
        assert!(g.len() >= 150, "pool has only {} triangles", g.len());
        let mut seen = BTreeSet::new();
        for i in 0..g.len() {
            let s = g.get(i);
            assert!(is_heronian(s), "{s:?}");
            assert!(s[0] != s[1] && s[1] != s[2] && s[0] != s[2]);
            let mut k = s;
            k.sort_unstable();
            assert!(seen.insert(k));
        }
    }

    #[test]
    fn isosceles_gluing_rejected() {
        assert!(!glued_triangles(MAX_LEG).contains(&[5, 5, 6]));
    }

    #[test]
    fn same_seed_same_sequence() {
        assert_eq!(generate_heronian(11, 20), generate_heronian(11, 20));
        assert_ne!(generate_heronian(11, 20), generate_heronian(12, 20));
    }
}
