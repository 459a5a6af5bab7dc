//! Finite Weyl groups realized as (signed) permutation groups.
//!
//! Every element is enumerated up front and addressed by an [`Element`]
//! index. Indices follow the canonical order: by length, then by the
//! normal-form word compared as a string. That order is part of the
//! serialized formats, so it must never change.
//!
//! Normal forms are built from the right: the last letter of `word(w)` is the
//! smallest right descent `s` of `w`, preceded by `word(ws)`. This reproduces
//! the words printed in the standard cell tables (e.g. `312` rather than
//! `132` in type B3). [`CoxeterSystem::shortlex_word`] gives the
//! left-greedy ShortLex form for comparison.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest group this engine will enumerate.
pub const MAX_ORDER: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            "G" | "g" => Ok(CartanType::G),
            other => Err(Error::Config(format!("unknown Cartan type {other:?}"))),
        }
    }
}

/// Index of a group element in the canonical enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        Element(i as u32)
    }
}

/// A set of simple reflections, as a bitmask over generator indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenSet(pub u32);

impl GenSet {
    pub fn contains(self, s: usize) -> bool {
        self.0 & (1 << s) != 0
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |s| self.0 & (1 << s) != 0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest generator in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut g = GenSet::default();
        for s in iter {
            g.insert(s);
        }
        g
    }
}

/// A finite Weyl group with its simple reflections.
pub struct CoxeterSystem {
    cartan_type: CartanType,
    rank: usize,
    coxeter_matrix: Vec<Vec<u32>>,
    encodings: Vec<Vec<i8>>,
    lookup: HashMap<Vec<i8>, Element>,
    words: Vec<Vec<u8>>,
    lengths: Vec<u32>,
    right: Vec<Element>,
    left: Vec<Element>,
    inverses: Vec<Element>,
    bruhat: Vec<Vec<u64>>,
    longest: Element,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("type", &self.cartan_type)
            .field("rank", &self.rank)
            .field("order", &self.order())
            .finish()
    }
}

fn apply(enc: &[i8], j: i8) -> i8 {
    let img = enc[(j.unsigned_abs() - 1) as usize];
    if j < 0 {
        -img
    } else {
        img
    }
}

fn compose(a: &[i8], b: &[i8]) -> Vec<i8> {
    b.iter().map(|&j| apply(a, j)).collect()
}

fn expected_order(ty: CartanType, n: usize) -> usize {
    let fact = |k: usize| (1..=k).product::<usize>();
    match ty {
        CartanType::A => fact(n + 1),
        CartanType::B | CartanType::C => (1 << n) * fact(n),
        CartanType::D => (1 << (n - 1)) * fact(n),
        CartanType::G => 12,
    }
}

/// Generator encodings as signed permutations of `1..=points`.
fn generators(ty: CartanType, n: usize) -> Vec<Vec<i8>> {
    let identity = |points: usize| (1..=points as i8).collect::<Vec<i8>>();
    let transposition = |points: usize, i: usize| {
        let mut g = identity(points);
        g.swap(i, i + 1);
        g
    };
    match ty {
        CartanType::A => (0..n).map(|i| transposition(n + 1, i)).collect(),
        CartanType::B | CartanType::C => {
            let mut gens: Vec<_> = (0..n - 1).map(|i| transposition(n, i)).collect();
            let mut last = identity(n);
            last[n - 1] = -(n as i8);
            gens.push(last);
            gens
        }
        CartanType::D => {
            let mut gens: Vec<_> = (0..n - 1).map(|i| transposition(n, i)).collect();
            let mut last = identity(n);
            last[n - 2] = -(n as i8);
            last[n - 1] = -(n as i8 - 1);
            gens.push(last);
            gens
        }
        CartanType::G => {
            // Dihedral group of the hexagon on points 0..6: i -> -i and i -> 1 - i.
            let refl = |a: i32| {
                (0..6)
                    .map(|i| ((a - i).rem_euclid(6) + 1) as i8)
                    .collect::<Vec<i8>>()
            };
            vec![refl(0), refl(1)]
        }
    }
}

impl CoxeterSystem {
    /// Builds the Weyl group of the given type.
    ///
    /// Generators are labelled `1..=rank` along the Dynkin diagram: type B/C
    /// has its double bond between `rank-1` and `rank`, type D branches at
    /// node `rank-2` with leaves `rank-1` and `rank`.
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let ok = match cartan_type {
            CartanType::A | CartanType::B | CartanType::C => rank >= 1,
            CartanType::D => rank >= 3,
            CartanType::G => rank == 2,
        };
        if !ok || rank > 9 {
            return Err(Error::Config(format!(
                "type {cartan_type}{rank} is not supported"
            )));
        }
        if expected_order(cartan_type, rank) > MAX_ORDER {
            return Err(Error::Config(format!(
                "type {cartan_type}{rank} has {} elements, above the limit {MAX_ORDER}",
                expected_order(cartan_type, rank)
            )));
        }
        let gens = generators(cartan_type, rank);
        let n = rank;

        // Breadth-first enumeration; BFS depth is the Coxeter length.
        let mut encodings = vec![gens[0].iter().map(|&x| x.abs()).collect::<Vec<i8>>()];
        encodings[0].sort();
        let mut lookup: HashMap<Vec<i8>, usize> = HashMap::new();
        lookup.insert(encodings[0].clone(), 0);
        let mut lengths = vec![0u32];
        let mut head = 0;
        while head < encodings.len() {
            let cur = encodings[head].clone();
            for g in &gens {
                let next = compose(&cur, g);
                if !lookup.contains_key(&next) {
                    lookup.insert(next.clone(), encodings.len());
                    encodings.push(next);
                    lengths.push(lengths[head] + 1);
                }
            }
            head += 1;
        }
        let size = encodings.len();
        if size != expected_order(cartan_type, rank) {
            return Err(Error::Config(format!(
                "enumeration of {cartan_type}{rank} produced {size} elements"
            )));
        }

        let raw_right: Vec<usize> = (0..size)
            .flat_map(|w| {
                let enc = &encodings[w];
                let lookup = &lookup;
                gens.iter().map(move |g| lookup[&compose(enc, g)])
            })
            .collect();

        // Normal forms in BFS order (lengths are nondecreasing along it).
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); size];
        for w in 1..size {
            let s = (0..n)
                .find(|&s| lengths[raw_right[w * n + s]] < lengths[w])
                .expect("nonidentity element has a right descent");
            let mut word = words[raw_right[w * n + s]].clone();
            word.push(s as u8);
            words[w] = word;
        }

        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by(|&a, &b| {
            lengths[a]
                .cmp(&lengths[b])
                .then_with(|| words[a].cmp(&words[b]))
        });
        let mut new_index = vec![0usize; size];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }

        let encodings: Vec<Vec<i8>> = order.iter().map(|&o| encodings[o].clone()).collect();
        let words: Vec<Vec<u8>> = order.iter().map(|&o| words[o].clone()).collect();
        let lengths: Vec<u32> = order.iter().map(|&o| lengths[o]).collect();
        let lookup: HashMap<Vec<i8>, Element> = encodings
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), Element::from_index(i)))
            .collect();
        let mut right = vec![Element::IDENTITY; size * n];
        for old in 0..size {
            for s in 0..n {
                right[new_index[old] * n + s] =
                    Element::from_index(new_index[raw_right[old * n + s]]);
            }
        }
        let inverses: Vec<Element> = encodings
            .iter()
            .map(|enc| {
                let mut inv = vec![0i8; enc.len()];
                for (i, &img) in enc.iter().enumerate() {
                    let p = (img.unsigned_abs() - 1) as usize;
                    inv[p] = if img < 0 { -(i as i8 + 1) } else { i as i8 + 1 };
                }
                lookup[&inv]
            })
            .collect();
        let mut left = vec![Element::IDENTITY; size * n];
        for w in 0..size {
            for s in 0..n {
                // s w = (w^-1 s)^-1
                let winv = inverses[w].index();
                left[w * n + s] = inverses[right[winv * n + s].index()];
            }
        }

        let mut coxeter_matrix = vec![vec![1u32; n]; n];
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let mut x = Element::IDENTITY;
                let mut m = 0;
                loop {
                    x = right[right[x.index() * n + s].index() * n + t];
                    m += 1;
                    if x == Element::IDENTITY {
                        break;
                    }
                }
                coxeter_matrix[s][t] = m;
            }
        }

        let longest = Element::from_index(size - 1);
        let mut sys = CoxeterSystem {
            cartan_type,
            rank,
            coxeter_matrix,
            encodings,
            lookup,
            words,
            lengths,
            right,
            left,
            inverses,
            bruhat: Vec::new(),
            longest,
        };
        sys.bruhat = sys.compute_bruhat();
        Ok(sys)
    }

    fn compute_bruhat(&self) -> Vec<Vec<u64>> {
        let size = self.order();
        let blocks = size.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(size);
        for w in self.elements() {
            let mut row = vec![0u64; blocks];
            match self.left_descents(w).first() {
                None => row[0] |= 1,
                Some(s) => {
                    let sw = self.lmul_gen(s, w);
                    let below = &rows[sw.index()];
                    for y in self.elements() {
                        let sy = self.lmul_gen(s, y);
                        let probe = if sy < y { sy } else { y };
                        if below[probe.index() / 64] >> (probe.index() % 64) & 1 == 1 {
                            row[y.index() / 64] |= 1 << (y.index() % 64);
                        }
                    }
                }
            }
            rows.push(row);
        }
        rows
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.encodings.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    /// Generator labels `"1".."n"`.
    pub fn labels(&self) -> Vec<String> {
        (1..=self.rank).map(|i| i.to_string()).collect()
    }

    pub fn all_generators(&self) -> GenSet {
        GenSet((1u32 << self.rank) - 1)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator {
        (0..self.order()).map(Element::from_index)
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    /// The longest element `w0`.
    pub fn longest(&self) -> Element {
        self.longest
    }

    pub fn generator(&self, s: usize) -> Element {
        self.right[s]
    }

    /// Signed-permutation image vector of `w`.
    pub fn encoding(&self, w: Element) -> &[i8] {
        &self.encodings[w.index()]
    }

    #[inline]
    pub fn length(&self, w: Element) -> u32 {
        self.lengths[w.index()]
    }

    /// `w s`.
    #[inline]
    pub fn rmul_gen(&self, w: Element, s: usize) -> Element {
        self.right[w.index() * self.rank + s]
    }

    /// `s w`.
    #[inline]
    pub fn lmul_gen(&self, s: usize, w: Element) -> Element {
        self.left[w.index() * self.rank + s]
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.lookup[&compose(self.encoding(a), self.encoding(b))]
    }

    #[inline]
    pub fn inverse(&self, w: Element) -> Element {
        self.inverses[w.index()]
    }

    pub fn is_involution(&self, w: Element) -> bool {
        self.inverse(w) == w
    }

    /// `s` with `l(ws) < l(w)`.
    #[inline]
    pub fn has_right_descent(&self, w: Element, s: usize) -> bool {
        self.rmul_gen(w, s) < w
    }

    /// `s` with `l(sw) < l(w)`.
    #[inline]
    pub fn has_left_descent(&self, w: Element, s: usize) -> bool {
        self.lmul_gen(s, w) < w
    }

    pub fn right_descents(&self, w: Element) -> GenSet {
        (0..self.rank)
            .filter(|&s| self.has_right_descent(w, s))
            .collect()
    }

    pub fn left_descents(&self, w: Element) -> GenSet {
        (0..self.rank)
            .filter(|&s| self.has_left_descent(w, s))
            .collect()
    }

    /// Longest element of the standard parabolic subgroup on `subset`.
    pub fn longest_element(&self, subset: GenSet) -> Element {
        let mut w = Element::IDENTITY;
        while let Some(s) = subset.iter().find(|&s| !self.has_right_descent(w, s)) {
            w = self.rmul_gen(w, s);
        }
        w
    }

    /// Bruhat order `y <= w`.
    #[inline]
    pub fn bruhat_leq(&self, y: Element, w: Element) -> bool {
        self.bruhat[w.index()][y.index() / 64] >> (y.index() % 64) & 1 == 1
    }

    /// Elements `y <= w`, ascending.
    pub fn bruhat_interval(&self, w: Element) -> impl Iterator<Item = Element> + '_ {
        (0..=w.index())
            .map(Element::from_index)
            .filter(move |&y| self.bruhat_leq(y, w))
    }

    /// Normal-form word as generator indices (0-based).
    pub fn word_letters(&self, w: Element) -> &[u8] {
        &self.words[w.index()]
    }

    /// Normal-form word as a digit string; the identity is `"e"`.
    pub fn word(&self, w: Element) -> String {
        let letters = self.word_letters(w);
        if letters.is_empty() {
            return "e".to_string();
        }
        letters.iter().map(|&s| char::from(b'1' + s)).collect()
    }

    /// Left-greedy ShortLex normal form (smallest left descent first).
    pub fn shortlex_word(&self, w: Element) -> String {
        let mut out = String::new();
        let mut cur = w;
        while let Some(s) = self.left_descents(cur).first() {
            out.push(char::from(b'1' + s as u8));
            cur = self.lmul_gen(s, cur);
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }

    /// Parses a digit word (any word, reduced or not) into the product of
    /// its letters. `"e"` and the empty string denote the identity.
    pub fn parse(&self, word: &str) -> Result<Element> {
        let trimmed = word.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Ok(Element::IDENTITY);
        }
        let mut w = Element::IDENTITY;
        for (pos, ch) in trimmed.chars().enumerate() {
            let s = match ch.to_digit(10) {
                Some(d) if d >= 1 && (d as usize) <= self.rank => d as usize - 1,
                _ => {
                    return Err(Error::Word {
                        word: word.to_string(),
                        position: pos,
                        reason: format!("{ch:?} is not a generator label 1..{}", self.rank),
                    })
                }
            };
            w = self.rmul_gen(w, s);
        }
        Ok(w)
    }

    /// Element with the given signed-permutation encoding.
    pub fn from_encoding(&self, enc: &[i8]) -> Option<Element> {
        self.lookup.get(enc).copied()
    }

    /// Conjugation by `w0`, as a permutation of generator indices.
    pub fn w0_conjugation(&self) -> Vec<usize> {
        let w0 = self.longest;
        (0..self.rank)
            .map(|s| {
                let c = self.mul(self.mul(w0, self.generator(s)), w0);
                (0..self.rank)
                    .find(|&t| self.generator(t) == c)
                    .expect("w0 normalizes S")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: CartanType, n: usize) -> CoxeterSystem {
        CoxeterSystem::new(t, n).unwrap()
    }

    /// Subword property: `y <= w` iff some subword of a reduced word of `w`
    /// multiplies to `y`.
    fn subword_leq(sys: &CoxeterSystem, y: Element, w: Element) -> bool {
        let word = sys.word_letters(w);
        (0u32..1 << word.len()).any(|mask| {
            let mut x = Element::IDENTITY;
            for (i, &s) in word.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x = sys.rmul_gen(x, s as usize);
                }
            }
            x == y
        })
    }

    #[test]
    fn orders_match_classical_formula() {
        assert_eq!(sys(CartanType::A, 1).order(), 2);
        assert_eq!(sys(CartanType::A, 2).order(), 6);
        assert_eq!(sys(CartanType::G, 2).order(), 12);
        assert_eq!(sys(CartanType::B, 3).order(), 48);
        assert_eq!(sys(CartanType::D, 4).order(), 192);
        assert_eq!(sys(CartanType::A, 5).order(), 720);
    }

    #[test]
    fn unsupported_configurations_fail() {
        assert!(matches!(
            CoxeterSystem::new(CartanType::G, 3),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            CoxeterSystem::new(CartanType::D, 2),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            CoxeterSystem::new(CartanType::A, 0),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            CoxeterSystem::new(CartanType::A, 9),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn coxeter_matrices() {
        let b3 = sys(CartanType::B, 3);
        assert_eq!(
            b3.coxeter_matrix(),
            &[vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]]
        );
        let d4 = sys(CartanType::D, 4);
        assert_eq!(d4.coxeter_matrix()[1], vec![3, 1, 3, 3]);
        assert_eq!(d4.coxeter_matrix()[0][2], 2);
        assert_eq!(d4.coxeter_matrix()[2][3], 2);
        let g2 = sys(CartanType::G, 2);
        assert_eq!(g2.coxeter_matrix()[0][1], 6);
        for t in [CartanType::A, CartanType::B, CartanType::D] {
            let s = sys(t, 4);
            for i in 0..4 {
                for j in 0..4 {
                    let m = s.coxeter_matrix()[i][j];
                    assert_eq!(m, s.coxeter_matrix()[j][i]);
                    assert!(if i == j {
                        m == 1
                    } else {
                        [2, 3, 4, 6].contains(&m)
                    });
                }
            }
        }
    }

    #[test]
    fn b_and_c_coincide() {
        let b = sys(CartanType::B, 3);
        let c = sys(CartanType::C, 3);
        assert_eq!(b.coxeter_matrix(), c.coxeter_matrix());
        let bw: Vec<_> = b.elements().map(|w| b.word(w)).collect();
        let cw: Vec<_> = c.elements().map(|w| c.word(w)).collect();
        assert_eq!(bw, cw);
    }

    #[test]
    fn multiply_examples() {
        let a2 = sys(CartanType::A, 2);
        let one = a2.parse("1").unwrap();
        let two = a2.parse("2").unwrap();
        let w = a2.parse("121").unwrap();
        assert_eq!(a2.mul(Element::IDENTITY, w), w);
        let p = a2.mul(one, two);
        assert_eq!(a2.word(p), "12");
        assert_eq!(a2.length(p), 2);
        assert_eq!(a2.mul(one, one), Element::IDENTITY);
        assert_eq!(a2.word(a2.inverse(p)), "21");
    }

    #[test]
    fn longest_lengths() {
        assert_eq!(
            sys(CartanType::B, 3).length(sys(CartanType::B, 3).longest()),
            9
        );
        let g2 = sys(CartanType::G, 2);
        assert_eq!(g2.word(g2.longest()).len(), 6);
        assert_eq!(g2.length(g2.longest()), 6);
        assert_eq!(g2.longest(), g2.parse("212121").unwrap());
    }

    #[test]
    fn parabolic_longest_elements() {
        let a2 = sys(CartanType::A, 2);
        assert_eq!(a2.longest_element(GenSet::default()), Element::IDENTITY);
        assert_eq!(a2.word(a2.longest_element(GenSet(0b01))), "1");
        assert_eq!(a2.word(a2.longest_element(GenSet(0b11))), "121");
        for t in [CartanType::A, CartanType::B, CartanType::D] {
            let s = sys(t, 4);
            for mask in 0..16u32 {
                let w = s.longest_element(GenSet(mask));
                assert!(s.is_involution(w));
                assert_eq!(s.right_descents(w), GenSet(mask));
            }
            assert_eq!(s.longest_element(s.all_generators()), s.longest());
        }
    }

    #[test]
    fn enumeration_order() {
        let a1 = sys(CartanType::A, 1);
        let words: Vec<_> = a1.elements().map(|w| a1.word(w)).collect();
        assert_eq!(words, ["e", "1"]);
        let a2 = sys(CartanType::A, 2);
        let lens: Vec<_> = a2.elements().map(|w| a2.length(w)).collect();
        assert_eq!(lens, [0, 1, 1, 2, 2, 3]);
        let words: Vec<_> = a2.elements().map(|w| a2.word(w)).collect();
        assert_eq!(words, ["e", "1", "2", "12", "21", "121"]);
    }

    #[test]
    fn normal_form_is_right_greedy() {
        let b3 = sys(CartanType::B, 3);
        let w = b3.parse("132").unwrap();
        assert_eq!(b3.word(w), "312");
        assert_eq!(b3.shortlex_word(w), "132");
        for w in b3.elements() {
            assert_eq!(b3.parse(&b3.word(w)).unwrap(), w);
            assert_eq!(b3.word_letters(w).len() as u32, b3.length(w));
        }
    }

    #[test]
    fn word_errors_carry_position() {
        let a2 = sys(CartanType::A, 2);
        match a2.parse("12x") {
            Err(Error::Word { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        assert!(a2.parse("13").is_err());
    }

    #[test]
    fn bruhat_matches_subword_property() {
        for (t, n) in [
            (CartanType::A, 2),
            (CartanType::B, 2),
            (CartanType::A, 3),
            (CartanType::G, 2),
        ] {
            let s = sys(t, n);
            for y in s.elements() {
                for w in s.elements() {
                    assert_eq!(
                        s.bruhat_leq(y, w),
                        subword_leq(&s, y, w),
                        "{} <= {}",
                        s.word(y),
                        s.word(w)
                    );
                }
            }
        }
        let a2 = sys(CartanType::A, 2);
        assert!(a2.bruhat_leq(a2.parse("12").unwrap(), a2.parse("121").unwrap()));
    }

    #[test]
    fn length_and_w0_identities() {
        for (t, n) in [
            (CartanType::A, 3),
            (CartanType::B, 3),
            (CartanType::D, 4),
            (CartanType::G, 2),
        ] {
            let s = sys(t, n);
            let w0 = s.longest();
            let l0 = s.length(w0);
            for w in s.elements() {
                assert_eq!(s.length(w) + s.length(s.mul(w, w0)), l0);
                assert_eq!(s.length(s.mul(s.mul(w0, w), w0)), s.length(w));
                assert_eq!(s.length(s.inverse(w)), s.length(w));
                assert_eq!(s.inverse(s.inverse(w)), w);
                for x in [w0, s.generator(0)] {
                    let p = s.mul(w, x);
                    assert!(s.length(p) <= s.length(w) + s.length(x));
                }
            }
        }
    }

    #[test]
    fn exchange_condition() {
        for (t, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::G, 2)] {
            let s = sys(t, n);
            for w in s.elements() {
                let word = s.word_letters(w);
                for g in 0..n {
                    let sw = s.lmul_gen(g, w);
                    if sw < w {
                        let found = (0..word.len()).any(|skip| {
                            let mut x = Element::IDENTITY;
                            for (i, &l) in word.iter().enumerate() {
                                if i != skip {
                                    x = s.rmul_gen(x, l as usize);
                                }
                            }
                            x == sw
                        });
                        assert!(found);
                    }
                }
            }
        }
    }

    #[test]
    fn w0_conjugation_is_diagram_automorphism() {
        assert_eq!(sys(CartanType::A, 3).w0_conjugation(), vec![2, 1, 0]);
        assert_eq!(sys(CartanType::B, 3).w0_conjugation(), vec![0, 1, 2]);
        assert_eq!(sys(CartanType::G, 2).w0_conjugation(), vec![0, 1]);
        assert_eq!(sys(CartanType::D, 4).w0_conjugation(), vec![0, 1, 2, 3]);
        assert_eq!(sys(CartanType::D, 5).w0_conjugation(), vec![0, 1, 2, 4, 3]);
    }
}
