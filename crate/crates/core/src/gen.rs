//! Random well-typed arrow terms, generated goal-directed from a requested
//! type so that every produced term type-checks by construction.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::syntax::{Arrow, ArrowType, Object, Side, Signature};

/// Recursive calls allowed per requested term before only leaf moves remain.
const FUEL: usize = 300;

#[derive(Clone, Copy, Debug)]
enum Move {
    Bang,
    Id,
    Proj(Side),
    Eval,
    Const(usize),
    Indet,
    // Recursive moves.
    Pair,
    Curry,
    ProjThen(Side),
    ConstAfter(usize),
    PointThen,
    Middle,
    EvalVia,
}

pub struct TermGen<'s, R> {
    sig: &'s Signature,
    rng: R,
    pool: Vec<Object>,
    consts: Vec<(Arrow, ArrowType)>,
    indet: Option<(Arrow, Object)>,
    allow_indet: bool,
    fuel: usize,
}

impl<'s, R: Rng> TermGen<'s, R> {
    /// A generator for base-category arrows over `sig`.
    pub fn new(sig: &'s Signature, rng: R) -> Self {
        let mut base: Vec<Object> = sig.atoms().map(|a| Object::Atom(a.clone())).collect();
        base.push(Object::Terminal);
        let mut pool = base.clone();
        for l in &base {
            for r in &base {
                if *l != Object::Terminal && *r != Object::Terminal {
                    pool.push(Object::prod(l.clone(), r.clone()));
                    pool.push(Object::exp(l.clone(), r.clone()));
                }
            }
        }
        let consts: Vec<(Arrow, ArrowType)> = sig
            .consts()
            .map(|(n, ty)| (Arrow::Const(n.clone()), ty.clone()))
            .collect();
        for (_, ty) in &consts {
            for o in [&ty.source, &ty.target] {
                if !pool.contains(o) {
                    pool.push(o.clone());
                }
            }
        }
        let indet = sig
            .indeterminate()
            .map(|x| (Arrow::Indet(x.name.clone()), x.target.clone()));
        TermGen {
            sig,
            rng,
            pool,
            consts,
            indet,
            allow_indet: false,
            fuel: FUEL,
        }
    }

    /// Also produce arrows mentioning the indeterminate.
    pub fn with_indeterminate(mut self, allow: bool) -> Self {
        self.allow_indet = allow && self.indet.is_some();
        self
    }

    pub fn set_indeterminate(&mut self, allow: bool) {
        self.allow_indet = allow && self.indet.is_some();
    }

    pub fn signature(&self) -> &'s Signature {
        self.sig
    }

    pub fn rng(&mut self) -> &mut R {
        &mut self.rng
    }

    /// A random object, biased toward atoms.
    pub fn object(&mut self) -> Object {
        let atoms = self.sig.atoms().count() + 1;
        let n = if self.rng.gen_bool(0.6) {
            atoms.min(self.pool.len())
        } else {
            self.pool.len()
        };
        self.pool[self.rng.gen_range(0..n)].clone()
    }

    /// A random arrow `src |- tgt` of nesting depth governed by `depth`, or
    /// `None` if the search found none (the hom-set may be empty).
    pub fn arrow(&mut self, src: &Object, tgt: &Object, depth: usize) -> Option<Arrow> {
        self.fuel = FUEL;
        self.go(src, tgt, depth)
    }

    /// A random arrow of a random inhabited type.
    pub fn any_arrow(&mut self, depth: usize) -> (Arrow, ArrowType) {
        loop {
            let src = self.object();
            let tgt = self.object();
            if let Some(f) = self.arrow(&src, &tgt, depth) {
                return (f, ArrowType::new(src, tgt));
            }
        }
    }

    /// A random arrow with the given source and a random target.
    pub fn arrow_from(&mut self, src: &Object, depth: usize) -> (Arrow, Object) {
        for _ in 0..64 {
            let tgt = self.object();
            if let Some(f) = self.arrow(src, &tgt, depth) {
                return (f, tgt);
            }
        }
        (Arrow::Bang(src.clone()), Object::Terminal)
    }

    /// A random arrow with the given target and a random source.
    pub fn arrow_into(&mut self, tgt: &Object, depth: usize) -> (Arrow, Object) {
        for _ in 0..64 {
            let src = self.object();
            if let Some(f) = self.arrow(&src, tgt, depth) {
                return (f, src);
            }
        }
        (Arrow::Id(tgt.clone()), tgt.clone())
    }

    fn moves(&mut self, src: &Object, tgt: &Object, depth: usize) -> Vec<Move> {
        let mut leaf = Vec::new();
        if *tgt == Object::Terminal {
            leaf.push(Move::Bang);
        }
        if src == tgt {
            leaf.push(Move::Id);
        }
        if let Some((l, r)) = src.as_prod() {
            if l == tgt {
                leaf.push(Move::Proj(Side::First));
            }
            if r == tgt {
                leaf.push(Move::Proj(Side::Second));
            }
            if let Some((d, c)) = r.as_exp() {
                if d == l && c == tgt {
                    leaf.push(Move::Eval);
                }
            }
        }
        for (i, (_, ty)) in self.consts.iter().enumerate() {
            if ty.source == *src && ty.target == *tgt {
                leaf.push(Move::Const(i));
            }
        }
        let indet_target = self.indet.as_ref().map(|(_, d)| d.clone());
        if self.allow_indet && *src == Object::Terminal && indet_target.as_ref() == Some(tgt) {
            leaf.push(Move::Indet);
        }

        let mut rec = Vec::new();
        if depth > 0 && self.fuel > 0 {
            if tgt.as_prod().is_some() {
                rec.push(Move::Pair);
            }
            if tgt.as_exp().is_some() {
                rec.push(Move::Curry);
            }
            if src.as_prod().is_some() {
                rec.push(Move::ProjThen(Side::First));
                rec.push(Move::ProjThen(Side::Second));
            }
            for (i, (_, ty)) in self.consts.iter().enumerate() {
                if ty.target == *tgt {
                    rec.push(Move::ConstAfter(i));
                }
            }
            if self.allow_indet && indet_target.is_some() {
                rec.push(Move::PointThen);
            }
            rec.push(Move::Middle);
            rec.push(Move::EvalVia);
        }

        leaf.shuffle(&mut self.rng);
        rec.shuffle(&mut self.rng);
        if self.rng.gen_bool(0.8) {
            rec.extend(leaf);
            rec
        } else {
            leaf.extend(rec);
            leaf
        }
    }

    fn go(&mut self, src: &Object, tgt: &Object, depth: usize) -> Option<Arrow> {
        self.fuel = self.fuel.saturating_sub(1);
        for mv in self.moves(src, tgt, depth) {
            if let Some(t) = self.attempt(mv, src, tgt, depth) {
                return Some(t);
            }
        }
        None
    }

    fn attempt(&mut self, mv: Move, src: &Object, tgt: &Object, depth: usize) -> Option<Arrow> {
        let d = depth.saturating_sub(1);
        match mv {
            Move::Bang => Some(Arrow::Bang(src.clone())),
            Move::Id => Some(Arrow::Id(src.clone())),
            Move::Proj(side) => {
                let (l, r) = src.as_prod()?;
                Some(Arrow::Proj(side, l.clone(), r.clone()))
            }
            Move::Eval => {
                let (l, r) = src.as_prod()?;
                let (_, c) = r.as_exp()?;
                Some(Arrow::Eval(l.clone(), c.clone()))
            }
            Move::Const(i) => Some(self.consts[i].0.clone()),
            Move::Indet => Some(self.indet.as_ref()?.0.clone()),
            Move::Pair => {
                let (l, r) = tgt.as_prod()?;
                let a = self.go(src, l, d)?;
                let b = self.go(src, r, d)?;
                Some(Arrow::pair(a, b))
            }
            Move::Curry => {
                let (dom, cod) = tgt.as_exp()?;
                let body = self.go(&Object::prod(dom.clone(), src.clone()), cod, d)?;
                Some(Arrow::curry(dom.clone(), src.clone(), body))
            }
            Move::ProjThen(side) => {
                let (l, r) = src.as_prod()?;
                let mid = match side {
                    Side::First => l,
                    Side::Second => r,
                };
                let rest = self.go(mid, tgt, d)?;
                Some(Arrow::comp(rest, Arrow::Proj(side, l.clone(), r.clone())))
            }
            Move::ConstAfter(i) => {
                let (c, ty) = self.consts[i].clone();
                let before = self.go(src, &ty.source, d)?;
                Some(Arrow::comp(c, before))
            }
            Move::PointThen => {
                let (x, dobj) = self.indet.clone()?;
                let point = Arrow::comp(x, Arrow::Bang(src.clone()));
                if dobj == *tgt {
                    Some(point)
                } else {
                    let rest = self.go(&dobj, tgt, d)?;
                    Some(Arrow::comp(rest, point))
                }
            }
            Move::Middle => {
                let mid = self.object();
                let before = self.go(src, &mid, d)?;
                let after = self.go(&mid, tgt, d)?;
                Some(Arrow::comp(after, before))
            }
            Move::EvalVia => {
                let mid = self.object();
                let arg = self.go(src, &mid, d)?;
                let fun = self.go(src, &Object::exp(mid.clone(), tgt.clone()), d)?;
                Some(Arrow::comp(
                    Arrow::Eval(mid, tgt.clone()),
                    Arrow::pair(arg, fun),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::parse_signature;
    use crate::syntax::type_of;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sig() -> Signature {
        parse_signature(include_str!("../data/default.sig")).unwrap()
    }

    #[test]
    fn generated_terms_have_requested_types() {
        let s = sig();
        let mut g = TermGen::new(&s, ChaCha8Rng::seed_from_u64(1)).with_indeterminate(true);
        let mut poly = 0;
        for depth in 0..=4 {
            for _ in 0..100 {
                let (f, ty) = g.any_arrow(depth);
                assert_eq!(type_of(&f, &s).unwrap(), ty, "{f}");
                poly += f.mentions_indeterminate() as usize;
            }
        }
        assert!(poly > 20, "too few polynomial terms: {poly}");
    }

    #[test]
    fn base_generator_never_mentions_indeterminate() {
        let s = sig();
        let mut g = TermGen::new(&s, ChaCha8Rng::seed_from_u64(2));
        for _ in 0..200 {
            assert!(!g.any_arrow(3).0.mentions_indeterminate());
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let s = sig();
        let run = |seed| {
            let mut g = TermGen::new(&s, ChaCha8Rng::seed_from_u64(seed)).with_indeterminate(true);
            (0..20).map(|_| g.any_arrow(3).0).collect::<Vec<_>>()
        };
        assert_eq!(run(9), run(9));
        assert_ne!(run(9), run(10));
    }

    #[test]
    fn produces_varied_shapes() {
        let s = sig();
        let mut g = TermGen::new(&s, ChaCha8Rng::seed_from_u64(3));
        let sizes: Vec<usize> = (0..200).map(|_| g.any_arrow(4).0.size()).collect();
        assert!(sizes.iter().any(|&n| n >= 10));
        assert!(sizes.iter().any(|&n| n <= 3));
        let d = Object::atom("D");
        let a = Object::atom("A");
        let found = (0..50)
            .filter_map(|_| g.arrow(&Object::prod(d.clone(), a.clone()), &Object::atom("B"), 3))
            .count();
        assert!(found > 40);
    }
}
