//! Set-theoretic interpretation of arrow terms in finite models.
//!
//! Every element of an interpreted object is enumerated in a fixed order:
//! products lexicographically, function spaces as tables over the domain's
//! enumeration with the first entry most significant. Function values are
//! stored as those tables, so structural equality of [`Elem`]s is
//! extensional equality.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::syntax::{type_of, Arrow, Name, Object, Side, Signature};

/// Objects with more elements than this are not enumerated.
pub const MAX_CARRIER: usize = 1 << 12;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Elem {
    Unit,
    Atom(usize),
    Pair(Box<Elem>, Box<Elem>),
    /// Table indexed by the domain's enumeration.
    Fun(Vec<Elem>),
}

#[derive(Clone, Debug, Default)]
pub struct FiniteModel {
    /// Carrier size for each atom; elements are `0..size`.
    pub carriers: BTreeMap<Name, usize>,
    /// Function table for each arrow constant, indexed by the source
    /// enumeration.
    pub consts: BTreeMap<Name, Vec<Elem>>,
    pub indet: Option<Elem>,
}

impl FiniteModel {
    pub fn cardinality(&self, obj: &Object) -> Result<usize> {
        let limit = |n: Option<usize>| match n {
            Some(n) if n <= MAX_CARRIER => Ok(n),
            _ => Err(Error::ModelTooLarge(obj.clone())),
        };
        match obj {
            Object::Terminal => Ok(1),
            Object::Atom(a) => self
                .carriers
                .get(a)
                .copied()
                .ok_or_else(|| Error::MissingInterpretation(a.to_string())),
            Object::Prod(l, r) => limit(self.cardinality(l)?.checked_mul(self.cardinality(r)?)),
            Object::Exp(d, c) => {
                let d = self.cardinality(d)?;
                let c = self.cardinality(c)?;
                limit(u32::try_from(d).ok().and_then(|d| c.checked_pow(d)))
            }
        }
    }

    /// All elements of `obj`, in enumeration order.
    pub fn elements(&self, obj: &Object) -> Result<Vec<Elem>> {
        self.cardinality(obj)?;
        Ok(match obj {
            Object::Terminal => vec![Elem::Unit],
            Object::Atom(a) => (0..self.carriers[a]).map(Elem::Atom).collect(),
            Object::Prod(l, r) => {
                let ls = self.elements(l)?;
                let rs = self.elements(r)?;
                ls.iter()
                    .flat_map(|a| {
                        rs.iter()
                            .map(move |b| Elem::Pair(Box::new(a.clone()), Box::new(b.clone())))
                    })
                    .collect()
            }
            Object::Exp(d, c) => {
                let n = self.cardinality(d)?;
                let cs = self.elements(c)?;
                let mut tables: Vec<Vec<Elem>> = vec![Vec::new()];
                for _ in 0..n {
                    tables = tables
                        .into_iter()
                        .flat_map(|t| {
                            cs.iter().map(move |e| {
                                let mut t = t.clone();
                                t.push(e.clone());
                                t
                            })
                        })
                        .collect();
                }
                tables.into_iter().map(Elem::Fun).collect()
            }
        })
    }

    /// Position of `e` in the enumeration of `obj`.
    pub fn index_of(&self, obj: &Object, e: &Elem) -> Result<usize> {
        match (obj, e) {
            (Object::Terminal, Elem::Unit) => Ok(0),
            (Object::Atom(_), Elem::Atom(i)) => Ok(*i),
            (Object::Prod(l, r), Elem::Pair(a, b)) => {
                Ok(self.index_of(l, a)? * self.cardinality(r)? + self.index_of(r, b)?)
            }
            (Object::Exp(_, c), Elem::Fun(table)) => {
                let base = self.cardinality(c)?;
                table
                    .iter()
                    .try_fold(0usize, |acc, x| Ok(acc * base + self.index_of(c, x)?))
            }
            _ => panic!("element {e:?} does not belong to {obj}"),
        }
    }

    pub fn random_elem<R: Rng + ?Sized>(&self, obj: &Object, rng: &mut R) -> Result<Elem> {
        Ok(match obj {
            Object::Terminal => Elem::Unit,
            Object::Atom(a) => {
                let n = self.cardinality(obj)?;
                if n == 0 {
                    return Err(Error::MissingInterpretation(a.to_string()));
                }
                Elem::Atom(rng.gen_range(0..n))
            }
            Object::Prod(l, r) => Elem::Pair(
                Box::new(self.random_elem(l, rng)?),
                Box::new(self.random_elem(r, rng)?),
            ),
            Object::Exp(d, c) => {
                let n = self.cardinality(d)?;
                Elem::Fun(
                    (0..n)
                        .map(|_| self.random_elem(c, rng))
                        .collect::<Result<_>>()?,
                )
            }
        })
    }

    /// A model with every atom of `sig` given between 1 and `max_size`
    /// elements and random tables for every constant.
    pub fn random<R: Rng + ?Sized>(sig: &Signature, max_size: usize, rng: &mut R) -> Result<Self> {
        let mut m = FiniteModel::default();
        for a in sig.atoms() {
            m.carriers
                .insert(a.clone(), rng.gen_range(1..=max_size.max(1)));
        }
        for (name, ty) in sig.consts() {
            let n = m.cardinality(&ty.source)?;
            let table = (0..n)
                .map(|_| m.random_elem(&ty.target, rng))
                .collect::<Result<_>>()?;
            m.consts.insert(name.clone(), table);
        }
        if let Some(x) = sig.indeterminate() {
            m.indet = Some(m.random_elem(&x.target, rng)?);
        }
        Ok(m)
    }

    fn apply(&self, f: &Arrow, sig: &Signature, e: &Elem) -> Result<Elem> {
        let pair_parts = |e: &Elem| match e {
            Elem::Pair(a, b) => ((**a).clone(), (**b).clone()),
            _ => panic!("expected a pair, found {e:?}"),
        };
        Ok(match f {
            Arrow::Const(name) => {
                let table = self
                    .consts
                    .get(name)
                    .ok_or_else(|| Error::MissingInterpretation(name.to_string()))?;
                let ty = type_of(f, sig)?;
                table[self.index_of(&ty.source, e)?].clone()
            }
            Arrow::Indet(name) => self
                .indet
                .clone()
                .ok_or_else(|| Error::MissingInterpretation(name.to_string()))?,
            Arrow::Id(_) => e.clone(),
            Arrow::Bang(_) => Elem::Unit,
            Arrow::Proj(side, ..) => {
                let (a, b) = pair_parts(e);
                match side {
                    Side::First => a,
                    Side::Second => b,
                }
            }
            Arrow::Eval(dom, _) => {
                let (a, h) = pair_parts(e);
                match h {
                    Elem::Fun(table) => table[self.index_of(dom, &a)?].clone(),
                    other => panic!("expected a function, found {other:?}"),
                }
            }
            Arrow::Comp(after, before) => {
                let mid = self.apply(before, sig, e)?;
                self.apply(after, sig, &mid)?
            }
            Arrow::Pair(a, b) => Elem::Pair(
                Box::new(self.apply(a, sig, e)?),
                Box::new(self.apply(b, sig, e)?),
            ),
            Arrow::Curry(dom, _, body) => {
                let table = self
                    .elements(dom)?
                    .into_iter()
                    .map(|a| self.apply(body, sig, &Elem::Pair(Box::new(a), Box::new(e.clone()))))
                    .collect::<Result<_>>()?;
                Elem::Fun(table)
            }
        })
    }
}

/// The function table of `f : A |- B`, indexed by the enumeration of `A`.
pub fn interpret_finite(f: &Arrow, sig: &Signature, m: &FiniteModel) -> Result<Vec<Elem>> {
    let ty = type_of(f, sig)?;
    m.elements(&ty.source)?
        .iter()
        .map(|e| m.apply(f, sig, e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{parse_arrow, parse_signature};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sig() -> Signature {
        parse_signature("object A\nobject B\nobject D\narrow f : A |- B\nindeterminate x : T |- D")
            .unwrap()
    }

    fn model(a: usize, b: usize) -> FiniteModel {
        let mut m = FiniteModel::default();
        m.carriers.insert("A".into(), a);
        m.carriers.insert("B".into(), b);
        m.carriers.insert("D".into(), 2);
        m.consts
            .insert("f".into(), (0..a).map(|i| Elem::Atom(i % b)).collect());
        m.indet = Some(Elem::Atom(1));
        m
    }

    #[test]
    fn identity_table() {
        let s = sig();
        let t = interpret_finite(&Arrow::Id(Object::atom("A")), &s, &model(3, 2)).unwrap();
        assert_eq!(t, vec![Elem::Atom(0), Elem::Atom(1), Elem::Atom(2)]);
    }

    #[test]
    fn bang_is_constant() {
        let s = sig();
        let t = interpret_finite(&Arrow::Bang(Object::atom("B")), &s, &model(3, 2)).unwrap();
        assert_eq!(t, vec![Elem::Unit; 2]);
    }

    #[test]
    fn eval_applies_tables() {
        // Enumerate (a, h) over A * (A -> B) and check the table against h(a)
        // computed directly from the element structure.
        let s = sig();
        let m = model(2, 3);
        let (a, b) = (Object::atom("A"), Object::atom("B"));
        let src = Object::prod(a.clone(), Object::exp(a.clone(), b.clone()));
        let elems = m.elements(&src).unwrap();
        assert_eq!(elems.len(), 2 * 9);
        let table = interpret_finite(&Arrow::Eval(a, b), &s, &m).unwrap();
        for (e, out) in elems.iter().zip(&table) {
            let Elem::Pair(x, h) = e else { panic!() };
            let (Elem::Atom(i), Elem::Fun(h)) = (&**x, &**h) else {
                panic!()
            };
            assert_eq!(&h[*i], out);
        }
    }

    #[test]
    fn enumeration_matches_index() {
        let s = sig();
        let m = model(2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for text in ["A * B", "A -> B", "(A -> B) * T", "B -> A * A", "T -> D"] {
            let obj = crate::surface::parse_object(text, &s).unwrap();
            let elems = m.elements(&obj).unwrap();
            assert_eq!(elems.len(), m.cardinality(&obj).unwrap());
            for (i, e) in elems.iter().enumerate() {
                assert_eq!(m.index_of(&obj, e).unwrap(), i);
            }
            let r = m.random_elem(&obj, &mut rng).unwrap();
            assert!(elems.contains(&r));
        }
    }

    #[test]
    fn separates_projections() {
        let s = sig();
        let a = Object::atom("A");
        let m = model(2, 2);
        let p1 = interpret_finite(&Arrow::p1(a.clone(), a.clone()), &s, &m).unwrap();
        let p2 = interpret_finite(&Arrow::p2(a.clone(), a), &s, &m).unwrap();
        assert_ne!(p1, p2);
    }

    #[test]
    fn beta_for_exponentials_holds_pointwise() {
        let s = sig();
        let m = model(2, 3);
        let f = parse_arrow(
            "eps[A,B] . <id[A] . p1[A,T], curry[A,T](f . p1[A,T]) . p2[A,T]>",
            &s,
        )
        .unwrap()
        .term;
        let g = parse_arrow("f . p1[A,T]", &s).unwrap().term;
        assert_eq!(
            interpret_finite(&f, &s, &m).unwrap(),
            interpret_finite(&g, &s, &m).unwrap()
        );
    }

    #[test]
    fn missing_and_oversized() {
        let s = sig();
        let mut m = model(2, 2);
        m.indet = None;
        assert!(matches!(
            interpret_finite(&Arrow::Indet("x".into()), &s, &m),
            Err(Error::MissingInterpretation(_))
        ));
        let a = Object::atom("A");
        let huge = Object::exp(Object::exp(a.clone(), Object::exp(a.clone(), a.clone())), a);
        m.carriers.insert("A".into(), 3);
        assert!(matches!(m.cardinality(&huge), Err(Error::ModelTooLarge(_))));
    }
}
