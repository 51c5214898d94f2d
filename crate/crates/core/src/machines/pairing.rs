//! Triangular pairing `<x,y> = x(x+1)/2 + y` for `y <= x`, and the full
//! code of pairs `(m, e)` built on top of it.

/// Triangular number `x(x+1)/2`.
pub fn triangular(x: u64) -> u64 {
    let t = (x as u128) * (x as u128 + 1) / 2;
    u64::try_from(t).expect("triangular number overflows u64")
}

/// `x(x+1)/2 + y`, a bijection from `{(x, y) : y <= x}` onto the naturals.
///
/// Panics if `y > x`.
pub fn pair(x: u64, y: u64) -> u64 {
    assert!(y <= x, "pair({x}, {y}) requires y <= x");
    triangular(x) + y
}

/// Inverse of [`pair`]: the unique `(x, y)` with `y <= x` and `pair(x, y) = n`.
pub fn unpair(n: u64) -> (u64, u64) {
    // largest x with T(x) <= n
    let disc = 8u128 * n as u128 + 1;
    let mut x = ((isqrt(disc) - 1) / 2) as u64;
    while triangular(x) > n {
        x -= 1;
    }
    while triangular(x + 1) <= n {
        x += 1;
    }
    (x, n - triangular(x))
}

fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

/// Code of an arbitrary pair `(m, e)`: `pair(m + e, e)`.
///
/// This is the triangular pairing composed with `(m, e) -> (m + e, e)`, which
/// lands on the `y <= x` domain, so the result is a bijection `N x N -> N`.
pub fn code(m: u64, e: u64) -> u64 {
    pair(m + e, e)
}

/// Inverse of [`code`].
pub fn uncode(c: u64) -> (u64, u64) {
    let (x, y) = unpair(c);
    (x - y, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(pair(0, 0), 0);
        assert_eq!(pair(1, 0), 1);
        assert_eq!(pair(1, 1), 2);
        assert_eq!(pair(2, 0), 3);
        assert_eq!(unpair(2), (1, 1));
    }

    #[test]
    fn triangle_round_trip() {
        for x in 0..1000 {
            for y in 0..=x {
                assert_eq!(unpair(pair(x, y)), (x, y));
            }
        }
    }

    #[test]
    fn code_round_trip() {
        for m in 0..1000 {
            for e in 0..1000 {
                assert_eq!(uncode(code(m, e)), (m, e));
            }
        }
    }

    #[test]
    fn large_values() {
        let n = u64::MAX / 4;
        let (x, y) = unpair(n);
        assert_eq!(pair(x, y), n);
    }

    #[test]
    #[should_panic]
    fn pair_requires_diagonal_order() {
        pair(1, 2);
    }
}
