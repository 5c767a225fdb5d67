use std::collections::BTreeMap;

use crate::field::Field;

/// Finite linear combination of basis keys with nonzero coefficients.
///
/// Keys are kept in a `BTreeMap`, so iteration order, equality and
/// serialization are all deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<K: Ord, F: Field> {
    terms: BTreeMap<K, F>,
}

impl<K: Ord, F: Field> Default for LinComb<K, F> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> LinComb<K, F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: F) -> Self {
        let mut lc = Self::zero();
        lc.add_term(key, coeff);
        lc
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, F)>) -> Self {
        let mut lc = Self::zero();
        for (k, c) in terms {
            lc.add_term(k, c);
        }
        lc
    }

    pub fn add_term(&mut self, key: K, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = c.add(&coeff);
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: &K) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &F)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn terms(&self) -> &BTreeMap<K, F> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<K, F> {
        self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect() }
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect() }
    }

    /// Apply a linear map given on basis keys.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, F>) -> LinComb<K2, F> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in f(k).terms {
                out.add_term(k2, c2.mul(c));
            }
        }
        out
    }

    /// Change coefficient field along a coefficient map.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> LinComb<K, G> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }
}

impl<K: Ord + Clone, F: Field> FromIterator<(K, F)> for LinComb<K, F> {
    fn from_iter<I: IntoIterator<Item = (K, F)>>(iter: I) -> Self {
        LinComb::from_terms(iter)
    }
}
