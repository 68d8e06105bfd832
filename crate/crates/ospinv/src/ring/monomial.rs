//! Canonical monomials of `S(N)` and the Koszul-signed product.
//!
//! A monomial is an even part — a sparse exponent list over even ordinals
//! — together with an odd part, stored as a bitmask over odd ordinals.
//! The odd part represents the product of its generators taken in
//! increasing global-index order; that choice of representative is what
//! makes every sign in the engine reproducible.

use std::cmp::Ordering;

/// A monomial `∏ x^{e}·∏ θ` in canonical form.
///
/// Invariants: the even list is strictly increasing in ordinal with all
/// exponents positive; the odd mask has one bit per odd generator (squares
/// of odd generators vanish, so no multiplicities).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    even: Vec<(u16, u16)>,
    odd: u64,
}

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial {
            even: Vec::new(),
            odd: 0,
        }
    }

    /// Single even generator with the given ordinal.
    pub fn even_gen(ordinal: usize) -> Self {
        Monomial {
            even: vec![(ordinal as u16, 1)],
            odd: 0,
        }
    }

    /// Single odd generator with the given ordinal (bit position).
    pub fn odd_gen(bit: usize) -> Self {
        debug_assert!(bit < 64);
        Monomial {
            even: Vec::new(),
            odd: 1u64 << bit,
        }
    }

    /// Assemble from parts; the even list must be strictly increasing in
    /// ordinal with positive exponents.
    pub fn from_parts(even: Vec<(u16, u16)>, odd: u64) -> Self {
        debug_assert!(even.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(even.iter().all(|&(_, e)| e > 0));
        Monomial { even, odd }
    }

    /// Sparse even exponents as `(ordinal, exponent)` pairs, ascending.
    pub fn even_part(&self) -> &[(u16, u16)] {
        &self.even
    }

    /// Bitmask of odd ordinals present.
    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    /// Odd ordinals present, ascending.
    pub fn odd_bits(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.odd;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(b)
            }
        })
    }

    /// Exponent of the even generator at `ordinal` (0 when absent).
    pub fn even_exp(&self, ordinal: usize) -> usize {
        match self
            .even
            .binary_search_by_key(&(ordinal as u16), |&(o, _)| o)
        {
            Ok(pos) => self.even[pos].1 as usize,
            Err(_) => 0,
        }
    }

    /// Does the monomial contain the odd generator at `bit`?
    pub fn has_odd(&self, bit: usize) -> bool {
        self.odd & (1u64 << bit) != 0
    }

    pub fn odd_count(&self) -> usize {
        self.odd.count_ones() as usize
    }

    /// Parity: number of odd factors mod 2.
    pub fn parity(&self) -> u8 {
        (self.odd_count() & 1) as u8
    }

    /// Total degree: even exponents plus odd factor count.
    pub fn total_degree(&self) -> usize {
        self.even.iter().map(|&(_, e)| e as usize).sum::<usize>() + self.odd_count()
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.odd == 0
    }

    /// Signed product.  Returns `None` when the factors share an odd
    /// generator (the product is zero); otherwise the sign is
    /// `(−1)^inversions`, counting the transpositions that merge the two
    /// increasing odd lists into one.
    pub fn mul(&self, rhs: &Monomial) -> Option<(i8, Monomial)> {
        if self.odd & rhs.odd != 0 {
            return None;
        }
        let sign = koszul_sign(self.odd, rhs.odd);
        let even = merge_even(&self.even, &rhs.even);
        Some((
            sign,
            Monomial {
                even,
                odd: self.odd | rhs.odd,
            },
        ))
    }

    /// Try to divide by `d`: returns `(sign, q)` with `q·d = sign·self`
    /// when the even exponents of `d` fit and its odd part is contained
    /// in ours; `None` otherwise.
    pub fn try_div(&self, d: &Monomial) -> Option<(i8, Monomial)> {
        if d.odd & !self.odd != 0 {
            return None;
        }
        let mut even = Vec::with_capacity(self.even.len());
        let mut j = 0;
        for &(o, e) in &self.even {
            let de = if j < d.even.len() && d.even[j].0 == o {
                let de = d.even[j].1;
                j += 1;
                de
            } else {
                0
            };
            if de > e {
                return None;
            }
            if e - de > 0 {
                even.push((o, e - de));
            }
        }
        if j < d.even.len() {
            return None; // divisor has an even generator we lack
        }
        let q = Monomial {
            even,
            odd: self.odd & !d.odd,
        };
        let sign = koszul_sign(q.odd, d.odd);
        Some((sign, q))
    }
}

/// Sign of moving the odd block `y` past the odd block `x` into merged
/// increasing order: `(−1)^{#{(i,j) : i ∈ x, j ∈ y, i > j}}`.
/// The masks must be disjoint.
pub fn koszul_sign(x: u64, y: u64) -> i8 {
    debug_assert_eq!(x & y, 0);
    let mut inversions = 0u32;
    let mut rest = y;
    while rest != 0 {
        let b = rest.trailing_zeros();
        inversions += (x & mask_above(b)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Mask of bit positions strictly above `b`.
fn mask_above(b: u32) -> u64 {
    if b >= 63 {
        0
    } else {
        u64::MAX << (b + 1)
    }
}

fn merge_even(a: &[(u16, u16)], b: &[(u16, u16)]) -> Vec<(u16, u16)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Canonical term order: graded, then lexicographic on even exponents
/// (an earlier even generator with a higher exponent is greater), then
/// lexicographic on the ascending odd index lists (at the first
/// difference, the list holding the smaller index is greater).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| cmp_even_lex(&self.even, &other.even))
            .then_with(|| cmp_odd_lex(self.odd, other.odd))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn cmp_even_lex(a: &[(u16, u16)], b: &[(u16, u16)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(oa, ea)), Some(&(ob, eb))) => {
                if oa != ob {
                    // the side with a positive exponent at the earlier
                    // ordinal wins
                    return if oa < ob {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
                i += 1;
                j += 1;
            }
        }
    }
}

fn cmp_odd_lex(mut x: u64, mut y: u64) -> Ordering {
    while x != 0 && y != 0 {
        let bx = x.trailing_zeros();
        let by = y.trailing_zeros();
        if bx != by {
            // smaller first index ⇒ greater monomial
            return by.cmp(&bx);
        }
        x &= x - 1;
        y &= y - 1;
    }
    x.count_ones().cmp(&y.count_ones())
}
