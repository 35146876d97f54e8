//! Small non-coset inverse monoids used as test subjects.

use super::FiniteInverseMonoid;
use crate::group::FiniteGroup;

/// Builds a validated monoid from an element list and a closed product.
fn from_elements<T: PartialEq>(
    elements: &[T],
    identity: usize,
    zero: usize,
    op: impl Fn(&T, &T) -> T,
    label: impl Fn(&T) -> String,
) -> FiniteInverseMonoid {
    let pos = |x: &T| elements.iter().position(|y| y == x).expect("closed product");
    let rows = elements
        .iter()
        .map(|a| elements.iter().map(|b| pos(&op(a, b))).collect())
        .collect();
    let labels = elements.iter().map(label).collect();
    FiniteInverseMonoid::validate(rows, identity, zero, Some(labels)).expect("construction yields an inverse monoid")
}

/// All partial bijections of `{1..n}` under left-to-right composition.
/// Element 0 is the identity, the last element the empty map. Panics for
/// `n > 4`, where the dense table stops being cheap to validate.
pub fn symmetric_inverse_monoid(n: usize) -> FiniteInverseMonoid {
    assert!(n <= 4, "symmetric inverse monoid limited to 4 points");
    let mut maps: Vec<Vec<Option<usize>>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for m in &maps {
            next.push({
                let mut v = m.clone();
                v.push(None);
                v
            });
            for y in 0..n {
                if !m.contains(&Some(y)) {
                    let mut v = m.clone();
                    v.push(Some(y));
                    next.push(v);
                }
            }
        }
        maps = next;
    }
    let rank = |m: &Vec<Option<usize>>| m.iter().filter(|x| x.is_some()).count();
    maps.sort_by(|a, b| rank(b).cmp(&rank(a)).then_with(|| a.cmp(b)));
    let identity_map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let identity = maps.iter().position(|m| *m == identity_map).expect("identity present");
    let zero = maps.len() - 1;
    from_elements(
        &maps,
        identity,
        zero,
        |p, q| p.iter().map(|x| x.and_then(|i| q[i])).collect(),
        |m| {
            let parts: Vec<String> = m
                .iter()
                .map(|x| x.map_or("-".to_string(), |i| (i + 1).to_string()))
                .collect();
            format!("[{}]", parts.join(" "))
        },
    )
}

/// The chain `0 < 1 < ... < k-1` under `min`; zero is 0, identity `k-1`.
pub fn chain_semilattice(k: usize) -> FiniteInverseMonoid {
    assert!(k >= 1);
    let elems: Vec<usize> = (0..k).collect();
    from_elements(&elems, k - 1, 0, |a, b| *a.min(b), |a| a.to_string())
}

/// `G` with a zero adjoined; the zero gets index `|G|`.
pub fn group_with_zero(g: &FiniteGroup) -> FiniteInverseMonoid {
    let n = g.order();
    let elems: Vec<Option<usize>> = (0..n).map(Some).chain([None]).collect();
    from_elements(
        &elems,
        g.identity(),
        n,
        |a, b| match (a, b) {
            (Some(x), Some(y)) => Some(g.mul(*x, *y)),
            _ => None,
        },
        |a| a.map_or("0".to_string(), |x| g.label(x).to_string()),
    )
}

/// The Brandt monoid `B_2^1`: matrix units `e_ij` on two indices, a zero
/// and an adjoined identity. Not factorizable.
pub fn brandt_with_identity() -> FiniteInverseMonoid {
    #[derive(PartialEq, Clone, Copy)]
    enum B {
        One,
        Zero,
        E(usize, usize),
    }
    let elems = [B::One, B::E(0, 0), B::E(0, 1), B::E(1, 0), B::E(1, 1), B::Zero];
    from_elements(
        &elems,
        0,
        5,
        |a, b| match (*a, *b) {
            (B::One, x) | (x, B::One) => x,
            (B::E(i, j), B::E(k, l)) if j == k => B::E(i, l),
            _ => B::Zero,
        },
        |a| match a {
            B::One => "1".into(),
            B::Zero => "0".into(),
            B::E(i, j) => format!("e{}{}", i + 1, j + 1),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::preset;

    #[test]
    fn sizes() {
        let counts: Vec<usize> = (0..=3).map(|n| symmetric_inverse_monoid(n).size()).collect();
        assert_eq!(counts, vec![1, 2, 7, 34]);
        assert_eq!(chain_semilattice(3).size(), 3);
        assert_eq!(group_with_zero(&preset("S3").unwrap()).size(), 7);
        assert_eq!(brandt_with_identity().size(), 6);
    }

    #[test]
    fn factorizability() {
        assert!(symmetric_inverse_monoid(2).is_factorizable());
        assert!(symmetric_inverse_monoid(3).is_factorizable());
        assert!(group_with_zero(&preset("Q8").unwrap()).is_factorizable());
        assert!(!brandt_with_identity().is_factorizable());
        // a semilattice is trivially factorizable: s = s * 1
        assert!(chain_semilattice(2).is_factorizable());
    }

    #[test]
    fn sim2_labels() {
        let m = symmetric_inverse_monoid(2);
        assert_eq!(m.label(m.identity()), "[1 2]");
        assert_eq!(m.label(m.zero()), "[- -]");
    }
}
