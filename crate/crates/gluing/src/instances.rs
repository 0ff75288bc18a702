//! Reproducible instance generators.
//!
//! Randomness is pinned for byte-identical output everywhere: a SplitMix64
//! stream (standard constants), uniform ranges by rejection sampling, and
//! Fisher-Yates swapping from index `n - 1` down to `1`. Any implementation
//! of these three rules, in any language, reproduces the same families from
//! the same seeds; the golden-file tests hold this crate to that.

use std::str::FromStr;

use crate::family::SetFamily;
use crate::Error;

/// Seed for the pinned PRNG stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Seed(pub u64);

/// SplitMix64 with the standard published constants.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> Self {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `[0, bound)` by rejection: draws `x` are accepted
    /// when `x < 2^64 - (2^64 mod bound)` and reduced mod `bound`.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let rem = (u64::MAX % bound + 1) % bound; // 2^64 mod bound
        let threshold = u64::MAX - rem;
        loop {
            let x = self.next_u64();
            if x <= threshold {
                return x % bound;
            }
        }
    }

    /// Uniform permutation of `[1, n]`: Fisher-Yates over the identity
    /// array, swapping position `i` with a uniform `j <= i` for `i` from
    /// `n - 1` down to `1`.
    pub fn permutation(&mut self, n: usize) -> Vec<u32> {
        let mut a: Vec<u32> = (1..=n as u32).collect();
        for i in (1..n).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            a.swap(i, j);
        }
        a
    }
}

/// The random permutation-triple model: `m = n` sets `{i, p(i), t(i)}` for
/// two independent uniform permutations `p` then `t` drawn from one stream.
/// Coinciding values are kept, so sets may have fewer than three elements.
pub fn gen_random3(n: u32, seed: Seed) -> SetFamily {
    assert!(n >= 1, "need at least one element");
    let mut rng = SplitMix64::new(seed);
    let p = rng.permutation(n as usize);
    let t = rng.permutation(n as usize);
    let sets = (1..=n)
        .map(|i| {
            let mut set = vec![i, p[i as usize - 1], t[i as usize - 1]];
            set.sort_unstable();
            set.dedup();
            set
        })
        .collect();
    SetFamily::new(n, 3.min(n), sets).expect("construction is valid")
}

/// The Fano plane: seven triples on seven points, any two meeting in
/// exactly one point.
pub fn fano() -> SetFamily {
    let lines = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ];
    SetFamily::new(7, 3, lines.iter().map(|l| l.to_vec()).collect()).expect("valid family")
}

/// The twelve lines of the Steiner triple system on nine points, realized
/// on the 3x3 grid `point(r, c) = 3r + c + 1` in the fixed order: rows,
/// columns, slope-one diagonals, slope-two diagonals.
fn sts9_lines() -> [[u32; 3]; 12] {
    [
        [1, 2, 3],
        [4, 5, 6],
        [7, 8, 9],
        [1, 4, 7],
        [2, 5, 8],
        [3, 6, 9],
        [1, 5, 9],
        [2, 6, 7],
        [3, 4, 8],
        [1, 6, 8],
        [2, 4, 9],
        [3, 5, 7],
    ]
}

/// The first `count` lines of the Steiner triple system on nine points in
/// its fixed line order. The declared ground set stays `[1, 9]`.
pub fn sts9(count: usize) -> Result<SetFamily, Error> {
    if !(1..=12).contains(&count) {
        return Err(Error::Domain(format!(
            "the triple system on 9 points has 12 lines; requested {count}"
        )));
    }
    let sets = sts9_lines()[..count].iter().map(|l| l.to_vec()).collect();
    SetFamily::new(9, 3, sets)
}

/// The eight lines of the Steiner triple system on nine points that avoid
/// point 1, relabeled onto the ground set `[1, 8]`.
pub fn sts9_minus_point() -> SetFamily {
    let sets = sts9_lines()
        .iter()
        .filter(|l| !l.contains(&1))
        .map(|l| l.iter().map(|&e| e - 1).collect())
        .collect();
    SetFamily::new(8, 3, sets).expect("valid family")
}

/// `m` pairwise-disjoint pairs `{1,2}, {3,4}, ...` with cap 2.
pub fn gen_disjoint_pairs(n: u32, m: usize) -> Result<SetFamily, Error> {
    if m as u64 * 2 > n as u64 {
        return Err(Error::Domain(format!(
            "{m} disjoint pairs need {} elements, ground set has {n}",
            2 * m
        )));
    }
    let sets = (0..m as u32).map(|i| vec![2 * i + 1, 2 * i + 2]).collect();
    SetFamily::new(n, 2, sets)
}

/// `m` sets drawn independently and uniformly among the `c`-element subsets
/// of `[1, n]`. Each draw is a partial Fisher-Yates over the identity
/// array: positions `n - 1` down to `n - c` are swapped with a uniform
/// earlier position and the last `c` entries form the set.
pub fn gen_uniform_random(n: u32, m: usize, c: u32, seed: Seed) -> Result<SetFamily, Error> {
    if c < 1 || c > n {
        return Err(Error::Domain(format!(
            "set size {c} must lie in [1, n] = [1, {n}]"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut sets = Vec::with_capacity(m);
    let stop = ((n - c) as usize).max(1);
    for _ in 0..m {
        let mut a: Vec<u32> = (1..=n).collect();
        for i in (stop..n as usize).rev() {
            let j = rng.next_below(i as u64 + 1) as usize;
            a.swap(i, j);
        }
        let mut set: Vec<u32> = a[(n - c) as usize..].to_vec();
        set.sort_unstable();
        sets.push(set);
    }
    SetFamily::new(n, c, sets)
}

/// Generator models exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    Random3,
    Fano,
    Sts9,
    Sts9MinusPoint,
    DisjointPairs,
    UniformRandom,
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "random3" => Ok(Model::Random3),
            "fano" => Ok(Model::Fano),
            "sts9" => Ok(Model::Sts9),
            "sts9_minus_point" => Ok(Model::Sts9MinusPoint),
            "disjoint_pairs" => Ok(Model::DisjointPairs),
            "uniform_random" => Ok(Model::UniformRandom),
            other => Err(Error::Domain(format!("unknown generator model '{other}'"))),
        }
    }
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Model::Random3 => "random3",
            Model::Fano => "fano",
            Model::Sts9 => "sts9",
            Model::Sts9MinusPoint => "sts9_minus_point",
            Model::DisjointPairs => "disjoint_pairs",
            Model::UniformRandom => "uniform_random",
        })
    }
}

/// A fully specified generation request; validates the model's parameter
/// constraints before generating.
#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    pub model: Model,
    pub n: Option<u32>,
    pub m: Option<usize>,
    pub c: Option<u32>,
    pub seed: Seed,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<SetFamily, Error> {
        let need = |v: Option<u32>, what: &str| {
            v.ok_or_else(|| Error::Domain(format!("model {} needs {what}", self.model)))
        };
        let fixed = |given: Option<u32>, want: u32, what: &str| match given {
            Some(v) if v != want => Err(Error::Domain(format!(
                "model {} fixes {what} = {want}, got {v}",
                self.model
            ))),
            _ => Ok(()),
        };
        match self.model {
            Model::Random3 => {
                let n = need(self.n, "--n")?;
                if let Some(m) = self.m {
                    fixed(Some(m as u32), n, "m")?;
                }
                if n == 0 {
                    return Err(Error::Domain("random3 needs n >= 1".into()));
                }
                Ok(gen_random3(n, self.seed))
            }
            Model::Fano => {
                fixed(self.n, 7, "n")?;
                fixed(self.m.map(|m| m as u32), 7, "m")?;
                Ok(fano())
            }
            Model::Sts9 => {
                fixed(self.n, 9, "n")?;
                sts9(self.m.unwrap_or(12))
            }
            Model::Sts9MinusPoint => {
                fixed(self.n, 8, "n")?;
                fixed(self.m.map(|m| m as u32), 8, "m")?;
                Ok(sts9_minus_point())
            }
            Model::DisjointPairs => {
                let n = need(self.n, "--n")?;
                let m = self
                    .m
                    .ok_or_else(|| Error::Domain("disjoint_pairs needs --m".into()))?;
                gen_disjoint_pairs(n, m)
            }
            Model::UniformRandom => {
                let n = need(self.n, "--n")?;
                let c = need(self.c, "--c")?;
                let m = self
                    .m
                    .ok_or_else(|| Error::Domain("uniform_random needs --m".into()))?;
                gen_uniform_random(n, m, c, self.seed)
            }
        }
    }
}
