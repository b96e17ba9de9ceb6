#![allow(dead_code)]

use uninorm_core::catalog::{idem_max, idem_min};
use uninorm_core::search::{EnumerationTask, SearchLimits};
use uninorm_core::{enumerate_uninorms, make, ChainScale, Family, FamilySpec, Uninorm};

pub fn l(n: usize) -> ChainScale {
    ChainScale::new(n).unwrap()
}

/// Every uninorm on `L_n` with neutral `e`, from the library enumerator.
pub fn all(n: usize, e: usize) -> Vec<Uninorm> {
    enumerate_uninorms(&EnumerationTask::new(l(n), e), &SearchLimits::default())
        .unwrap()
        .collect()
}

pub fn every_neutral(n: usize) -> Vec<Vec<Uninorm>> {
    (0..=n).map(|e| all(n, e)).collect()
}

/// Oracle: build every symmetric table with the neutral row fixed, then keep
/// the monotone, associative ones. No pruning, no shared code with the library.
pub fn naive_uninorms(n: usize, e: usize) -> Vec<Vec<Vec<usize>>> {
    let size = n + 1;
    let cells: Vec<(usize, usize)> = (0..size)
        .flat_map(|x| (x..size).map(move |y| (x, y)))
        .filter(|&(x, y)| x != e && y != e)
        .collect();
    let mut t = vec![vec![0usize; size]; size];
    for x in 0..size {
        t[e][x] = x;
        t[x][e] = x;
    }
    let mut out = Vec::new();
    let total = size.pow(cells.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &(x, y) in &cells {
            t[x][y] = c % size;
            t[y][x] = c % size;
            c /= size;
        }
        if naive_is_uninorm(&t, e) {
            out.push(t.clone());
        }
    }
    out.sort();
    out
}

pub fn naive_is_uninorm(t: &[Vec<usize>], e: usize) -> bool {
    let size = t.len();
    let r = 0..size;
    r.clone().all(|x| t[e][x] == x && t[x][e] == x)
        && r.clone().all(|x| r.clone().all(|y| t[x][y] == t[y][x]))
        && r.clone().all(|x| {
            r.clone().all(|y| (y + 1 >= size || t[x][y] <= t[x][y + 1]) && (x + 1 >= size || t[x][y] <= t[x + 1][y]))
        })
        && r.clone().all(|x| {
            r.clone().all(|y| r.clone().all(|z| t[t[x][y]][z] == t[x][t[y][z]]))
        })
}

/// Oracle: equation-by-equation distributivity over all `(n+1)^3` triples.
pub fn naive_distributes(u1: &[Vec<usize>], u2: &[Vec<usize>]) -> bool {
    let size = u1.len();
    for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                if u1[x][u2[y][z]] != u2[u1[x][y]][u1[x][z]] {
                    return false;
                }
            }
        }
    }
    true
}

/// One instance of every catalog family admissible on `L_n`.
pub fn catalog(n: usize) -> Vec<(String, Uninorm)> {
    let s = l(n);
    let mut out = Vec::new();
    let simple = [
        (Family::Min, n),
        (Family::LukasiewiczTNorm, n),
        (Family::DrasticTNorm, n),
        (Family::Max, 0),
        (Family::LukasiewiczTConorm, 0),
        (Family::DrasticTConorm, 0),
    ];
    for (f, e) in simple {
        out.push((f.name().to_string(), make(&FamilySpec::new(f, s, e)).unwrap()));
    }
    for e in 1..n {
        out.push((format!("umin-idempotent e={e}"), idem_min(s, e).unwrap()));
        out.push((format!("umax-idempotent e={e}"), idem_max(s, e).unwrap()));
        let ts = [Family::Min, Family::LukasiewiczTNorm, Family::DrasticTNorm];
        let ss = [Family::Max, Family::LukasiewiczTConorm, Family::DrasticTConorm];
        for t in &ts {
            for c in &ss {
                let tn = make(&FamilySpec::tnorm(t.clone(), l(e))).unwrap();
                let sn = make(&FamilySpec::tconorm(c.clone(), l(n - e))).unwrap();
                let label = format!("{}/{} e={e}", t.name(), c.name());
                out.push((format!("umin-of {label}"), make(&FamilySpec::umin_of(tn.clone(), sn.clone(), s, e)).unwrap()));
                out.push((format!("umax-of {label}"), make(&FamilySpec::umax_of(tn, sn, s, e)).unwrap()));
            }
        }
    }
    out
}
