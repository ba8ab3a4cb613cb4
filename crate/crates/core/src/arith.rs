//! Small exact-arithmetic helpers over `BigInt` and `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += y * x;
    }
    acc
}

/// Nonnegative gcd of all entries; zero for the zero vector.
pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn l1_norm(v: &[Int]) -> Int {
    v.iter().map(|x| x.abs()).sum()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Row-echelon accumulator used to test linear independence incrementally.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Rat>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Int]) -> Vec<Rat> {
        let mut r: Vec<Rat> = v.iter().cloned().map(Rat::from_integer).collect();
        for (pivot, row) in &self.rows {
            if r[*pivot].is_zero() {
                continue;
            }
            let f = r[*pivot].clone();
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        r
    }

    pub fn is_independent(&self, v: &[Int]) -> bool {
        self.reduce(v).iter().any(|x| !x.is_zero())
    }

    /// Adds `v` if it is independent of the rows so far; returns whether it was.
    pub fn insert(&mut self, v: &[Int]) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let p = r[pivot].clone();
        for x in r.iter_mut() {
            *x /= &p;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let f = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((pivot, r));
        true
    }

    /// Integer basis of the orthogonal complement of the row space in dimension `n`.
    pub fn integer_kernel(&self, n: usize) -> Vec<Vec<Int>> {
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let mut out = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for (p, row) in &self.rows {
                v[*p] = -row[free].clone();
            }
            out.push(primitive_from_rational(&v));
        }
        out
    }
}

pub fn rank(rows: &[Vec<Int>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Clears denominators and divides by the gcd, preserving direction.
pub fn primitive_from_rational(v: &[Rat]) -> Vec<Int> {
    let l = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

pub fn floor_rat(x: &Rat) -> Int {
    x.floor().to_integer()
}

pub fn ceil_rat(x: &Rat) -> Int {
    x.ceil().to_integer()
}
