#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use horocoh::fan_toric::{for_each_lattice_point, Fan, ToricDivisor};
use horocoh::{RootDatum, Weight};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every divisor with coefficients in `[-bound, bound]` when there are at
/// most `exhaustive_limit` of them, otherwise `samples` seeded draws.
pub fn divisors(
    fan: &Fan,
    bound: i64,
    exhaustive_limit: u64,
    samples: usize,
    seed: u64,
) -> Vec<ToricDivisor> {
    let n = fan.num_rays();
    let count = (2 * bound as u64 + 1)
        .checked_pow(n as u32)
        .unwrap_or(u64::MAX);
    if count <= exhaustive_limit {
        let mut all = Vec::new();
        for_each_lattice_point(&vec![-bound; n], &vec![bound; n], |a| {
            all.push(ToricDivisor(a.to_vec()));
            Ok::<(), ()>(())
        })
        .unwrap();
        all
    } else {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..samples)
            .map(|_| ToricDivisor((0..n).map(|_| rng.random_range(-bound..=bound)).collect()))
            .collect()
    }
}

/// Orbit of `nu` under the group generated by the simple reflections in
/// `letters`, with the BFS distance of each element.
pub fn orbit(datum: &RootDatum, nu: &Weight, letters: &[usize]) -> HashMap<Weight, usize> {
    let mut dist = HashMap::from([(nu.clone(), 0usize)]);
    let mut queue = VecDeque::from([nu.clone()]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for &i in letters {
            let y = datum.reflect(i, &x).unwrap();
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// `<nu, beta^vee> = 0` for some positive coroot.
pub fn on_a_wall(datum: &RootDatum, nu: &[i64]) -> bool {
    datum
        .positive_coroots
        .iter()
        .any(|c| c.iter().zip(nu).map(|(x, y)| x * y).sum::<i64>() == 0)
}

/// `|W|` as the size of the orbit of `rho`.
pub fn group_order(datum: &RootDatum, letters: &[usize]) -> usize {
    orbit(datum, &datum.rho(), letters).len()
}

pub fn distinct<T: std::hash::Hash + Eq + Clone>(items: &[T]) -> usize {
    items.iter().cloned().collect::<HashSet<_>>().len()
}
