use std::fmt;
use std::sync::Arc;

/// A group element, stored as the permutation it induces on root indices.
/// The action on roots is faithful for every supported group, so this is
/// also the equality and hashing key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: Arc<[u16]>,
}

impl GroupElement {
    pub fn identity(root_count: usize) -> Self {
        GroupElement { perm: (0..root_count as u16).collect() }
    }

    pub(crate) fn from_perm(perm: Vec<u16>) -> Self {
        GroupElement { perm: perm.into() }
    }

    /// Image of root index `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// `self · other`, acting as `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement { perm: other.perm.iter().map(|&j| self.perm[j as usize]).collect() }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        GroupElement::from_perm(inv)
    }

    pub fn pow(&self, k: usize) -> GroupElement {
        let mut acc = GroupElement::identity(self.perm.len());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// `self · x · self⁻¹`
    pub fn conjugate(&self, x: &GroupElement) -> GroupElement {
        self.compose(x).compose(&self.inverse())
    }

    /// Least `k ≥ 1` with `self^k = 1`.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{:?}", &self.perm[..])
    }
}

/// A set of positive-root indices (at most 128 positive roots).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn singleton(i: usize) -> Self {
        RootSet(1u128 << i)
    }

    pub fn full(n: usize) -> Self {
        if n == 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: RootSet) -> RootSet {
        RootSet(self.0 | o.0)
    }

    pub fn intersection(self, o: RootSet) -> RootSet {
        RootSet(self.0 & o.0)
    }

    pub fn difference(self, o: RootSet) -> RootSet {
        RootSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: RootSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<u16>> {
        Just((0..n as u16).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn composition_is_associative(a in perm_strategy(9), b in perm_strategy(9), c in perm_strategy(9)) {
            let (a, b, c) = (GroupElement::from_perm(a), GroupElement::from_perm(b), GroupElement::from_perm(c));
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert_eq!(b.pow(b.order()), GroupElement::identity(9));
        }
    }

    #[test]
    fn rootset_basics() {
        let s: RootSet = [0, 3, 127].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 127]);
        assert!(RootSet::singleton(3).is_subset(s));
        assert_eq!(RootSet::full(128).len(), 128);
        assert_eq!(s.difference(RootSet::singleton(0)).len(), 2);
    }
}
