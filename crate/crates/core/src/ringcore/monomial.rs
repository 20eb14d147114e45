use std::cmp::Ordering;
use std::fmt;

/// Largest exponent a monomial may carry.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

/// Exponent vector of a power product `x_1^a_1 ... x_n^a_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exps: impl Into<Box<[u32]>>) -> Self {
        Monomial(exps.into())
    }

    pub fn variable(nvars: usize, index: usize, exp: u32) -> Self {
        let mut v = vec![0; nvars];
        v[index] = exp;
        Monomial(v.into_boxed_slice())
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self <= other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, or `None` when `self` does not divide `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiplies every exponent by `factor`, failing if any exceeds [`MAX_EXPONENT`].
    pub fn scale_exponents(&self, factor: u64) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for &e in self.0.iter() {
            let v = e as u64 * factor;
            if v > MAX_EXPONENT as u64 {
                return None;
            }
            out.push(v as u32);
        }
        Some(Monomial(out.into_boxed_slice()))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A monomial order on exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x_1 > x_2 > ... > x_n`.
    Grevlex,
    Lex,
    /// Lex on the first `k` variables, ties broken by grevlex on the rest.
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                a[..k].cmp(&b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "grevlex" => return Ok(MonomialOrder::Grevlex),
            "lex" => return Ok(MonomialOrder::Lex),
            _ => {}
        }
        let inner = s
            .strip_prefix("block(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("block "));
        match inner.map(|k| k.trim().parse::<usize>()) {
            Some(Ok(k)) => Ok(MonomialOrder::Block(k)),
            _ => Err(format!("unknown monomial order `{s}` (expected grevlex, lex or block(k))")),
        }
    }
}
