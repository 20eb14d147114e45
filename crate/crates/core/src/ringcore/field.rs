/// An element of the prime field `F_p`, stored as its residue in `[0, p)`.
///
/// The modulus is not stored; every operation takes it explicitly. Since
/// `p < 2^16` the product of two residues fits in a `u32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldScalar(pub u32);

impl FieldScalar {
    pub const ZERO: FieldScalar = FieldScalar(0);
    pub const ONE: FieldScalar = FieldScalar(1);

    #[inline]
    pub fn new(value: u64, p: u32) -> Self {
        FieldScalar((value % p as u64) as u32)
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn from_i64(value: i64, p: u32) -> Self {
        FieldScalar(value.rem_euclid(p as i64) as u32)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn add(self, other: Self, p: u32) -> Self {
        let s = self.0 + other.0;
        FieldScalar(if s >= p { s - p } else { s })
    }

    #[inline]
    pub fn sub(self, other: Self, p: u32) -> Self {
        if self.0 >= other.0 {
            FieldScalar(self.0 - other.0)
        } else {
            FieldScalar(self.0 + p - other.0)
        }
    }

    #[inline]
    pub fn neg(self, p: u32) -> Self {
        if self.0 == 0 {
            self
        } else {
            FieldScalar(p - self.0)
        }
    }

    #[inline]
    pub fn mul(self, other: Self, p: u32) -> Self {
        FieldScalar(self.0 * other.0 % p)
    }

    pub fn pow(self, mut exp: u64, p: u32) -> Self {
        let mut base = self;
        let mut acc = FieldScalar(1 % p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(base, p);
            }
            base = base.mul(base, p);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem. Panics on zero.
    pub fn inv(self, p: u32) -> Self {
        assert!(!self.is_zero(), "inverse of zero in F_{p}");
        self.pow(p as u64 - 2, p)
    }
}

/// Deterministic primality test for the supported modulus range.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
