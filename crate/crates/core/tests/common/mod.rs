//! Test-only oracles that share no code path with the library's LR
//! enumeration or Pieri strips.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hilbnef::Partition;

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// All partitions of `n` (no box), largest parts first.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `h_a * s_lambda` in the full ring of symmetric functions: every
/// partition of `|lambda| + a` is tested for interlacing with `lambda`.
fn times_h(lambda: &[u32], a: i64) -> Vec<Vec<u32>> {
    if a < 0 {
        return Vec::new();
    }
    let size: u32 = lambda.iter().sum::<u32>() + a as u32;
    partitions_of(size)
        .into_iter()
        .map(|m| m.parts().to_vec())
        .filter(|mu| {
            let get = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
            mu.len() <= lambda.len() + 1
                && (0..mu.len().max(lambda.len())).all(|i| get(mu, i) >= get(lambda, i))
                && (1..mu.len()).all(|i| get(mu, i) <= get(lambda, i - 1))
        })
        .collect()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut q = perm.clone();
            q.insert(pos, n - 1);
            // inserting the largest element at `pos` adds (len - pos) inversions
            let s = if (perm.len() - pos) % 2 == 0 {
                sign
            } else {
                -sign
            };
            out.push((q, s));
        }
    }
    out
}

/// `s_lambda * s_nu` expanded in Schur functions, with `s_nu` written by
/// Jacobi-Trudi as `det(h_{nu_i - i + j})` and each `h` applied by
/// interlacing. Returns the coefficient map over all partitions.
pub fn schur_product(lambda: &Partition, nu: &Partition) -> BTreeMap<Vec<u32>, i64> {
    let l = nu.len();
    let mut total: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (perm, sign) in permutations(l) {
        let mut current: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        current.insert(lambda.parts().to_vec(), 1);
        for (i, &shift) in perm.iter().enumerate() {
            let a = nu.part(i) as i64 - i as i64 + shift as i64;
            let mut next = BTreeMap::new();
            for (shape, c) in &current {
                for mu in times_h(shape, a) {
                    *next.entry(mu).or_insert(0) += c;
                }
            }
            current = next;
        }
        for (shape, c) in current {
            *total.entry(shape).or_insert(0) += sign * c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

pub fn lr_oracle(lambda: &Partition, nu: &Partition, mu: &Partition) -> i64 {
    schur_product(lambda, nu)
        .get(mu.parts())
        .copied()
        .unwrap_or(0)
}
