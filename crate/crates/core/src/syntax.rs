//! Object and arrow terms of a cartesian closed system, their typing, and
//! the signature they are checked against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Name = Arc<str>;

/// Object terms. Equality is syntactic: `A*(B*C)` and `(A*B)*C` are distinct.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Object {
    Terminal,
    Atom(Name),
    Prod(Arc<Object>, Arc<Object>),
    Exp(Arc<Object>, Arc<Object>),
}

impl Object {
    pub fn atom(name: &str) -> Object {
        Object::Atom(name.into())
    }

    pub fn prod(left: Object, right: Object) -> Object {
        Object::Prod(Arc::new(left), Arc::new(right))
    }

    /// `domain -> codomain`.
    pub fn exp(domain: Object, codomain: Object) -> Object {
        Object::Exp(Arc::new(domain), Arc::new(codomain))
    }

    pub fn as_prod(&self) -> Option<(&Object, &Object)> {
        match self {
            Object::Prod(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn as_exp(&self) -> Option<(&Object, &Object)> {
        match self {
            Object::Exp(d, c) => Some((d, c)),
            _ => None,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Object::Terminal | Object::Atom(_) => 0,
            Object::Prod(l, r) | Object::Exp(l, r) => 1 + l.depth().max(r.depth()),
        }
    }
}

/// The type `source |- target` of an arrow.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArrowType {
    pub source: Object,
    pub target: Object,
}

impl ArrowType {
    pub fn new(source: Object, target: Object) -> Self {
        ArrowType { source, target }
    }
}

impl fmt::Display for ArrowType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.source, self.target)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Side {
    First,
    Second,
}

/// Arrow terms. Every primitive carries its object indices so that typing
/// is a bottom-up computation.
///
/// `Indet` is the adjoined indeterminate `x : T |- D`; a term without it is
/// an arrow of the base category, a term with it an arrow of the polynomial
/// extension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Arrow {
    Const(Name),
    Indet(Name),
    Id(Object),
    /// `k_A : A |- T`
    Bang(Object),
    /// `p^i_{A,B} : A*B |- A` or `B`
    Proj(Side, Object, Object),
    /// `eps_{A,B} : A*(A->B) |- B`
    Eval(Object, Object),
    /// `Comp(after, before)` is `after . before`.
    Comp(Arc<Arrow>, Arc<Arrow>),
    Pair(Arc<Arrow>, Arc<Arrow>),
    /// `gamma_{A,C} f : C |- A->B` for `f : A*C |- B`.
    Curry(Object, Object, Arc<Arrow>),
}

impl Arrow {
    pub fn constant(name: &str) -> Arrow {
        Arrow::Const(name.into())
    }

    pub fn p1(left: Object, right: Object) -> Arrow {
        Arrow::Proj(Side::First, left, right)
    }

    pub fn p2(left: Object, right: Object) -> Arrow {
        Arrow::Proj(Side::Second, left, right)
    }

    pub fn comp(after: Arrow, before: Arrow) -> Arrow {
        Arrow::Comp(Arc::new(after), Arc::new(before))
    }

    pub fn pair(fst: Arrow, snd: Arrow) -> Arrow {
        Arrow::Pair(Arc::new(fst), Arc::new(snd))
    }

    pub fn curry(dom: Object, ctx: Object, body: Arrow) -> Arrow {
        Arrow::Curry(dom, ctx, Arc::new(body))
    }

    /// Number of term constructors (object annotations not counted).
    pub fn size(&self) -> usize {
        match self {
            Arrow::Comp(a, b) | Arrow::Pair(a, b) => 1 + a.size() + b.size(),
            Arrow::Curry(_, _, body) => 1 + body.size(),
            _ => 1,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Arrow::Comp(a, b) | Arrow::Pair(a, b) => 1 + a.depth().max(b.depth()),
            Arrow::Curry(_, _, body) => 1 + body.depth(),
            _ => 0,
        }
    }

    pub fn mentions_indeterminate(&self) -> bool {
        match self {
            Arrow::Indet(_) => true,
            Arrow::Comp(a, b) | Arrow::Pair(a, b) => {
                a.mentions_indeterminate() || b.mentions_indeterminate()
            }
            Arrow::Curry(_, _, body) => body.mentions_indeterminate(),
            _ => false,
        }
    }

    /// Fails unless the term is an arrow of the base category.
    pub fn require_pure(&self) -> Result<()> {
        if self.mentions_indeterminate() {
            Err(Error::UnexpectedIndeterminate(Box::new(self.clone())))
        } else {
            Ok(())
        }
    }

    /// True for the primitive arrows of the base category (no subterms).
    pub fn is_primitive(&self) -> bool {
        matches!(
            self,
            Arrow::Const(_) | Arrow::Id(_) | Arrow::Bang(_) | Arrow::Proj(..) | Arrow::Eval(..)
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Indeterminate {
    pub name: Name,
    pub target: Object,
}

/// Declared object atoms, arrow constants, and at most one indeterminate.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Signature {
    atoms: BTreeSet<Name>,
    consts: BTreeMap<Name, ArrowType>,
    indeterminate: Option<Indeterminate>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    fn name_taken(&self, name: &str) -> bool {
        self.atoms.contains(name)
            || self.consts.contains_key(name)
            || self
                .indeterminate
                .as_ref()
                .is_some_and(|x| &*x.name == name)
    }

    pub fn add_atom(&mut self, name: &str) -> Result<()> {
        if self.name_taken(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        self.atoms.insert(name.into());
        Ok(())
    }

    pub fn add_const(&mut self, name: &str, ty: ArrowType) -> Result<()> {
        if self.name_taken(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        self.check_object(&ty.source)?;
        self.check_object(&ty.target)?;
        self.consts.insert(name.into(), ty);
        Ok(())
    }

    pub fn set_indeterminate(&mut self, name: &str, ty: ArrowType) -> Result<()> {
        if self.indeterminate.is_some() || self.name_taken(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        if ty.source != Object::Terminal {
            return Err(Error::BadIndeterminateType {
                name: name.to_string(),
                found: ty.source,
            });
        }
        self.check_object(&ty.target)?;
        self.indeterminate = Some(Indeterminate {
            name: name.into(),
            target: ty.target,
        });
        Ok(())
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Name> {
        self.atoms.iter()
    }

    pub fn consts(&self) -> impl Iterator<Item = (&Name, &ArrowType)> {
        self.consts.iter()
    }

    pub fn const_type(&self, name: &str) -> Option<&ArrowType> {
        self.consts.get(name)
    }

    pub fn indeterminate(&self) -> Option<&Indeterminate> {
        self.indeterminate.as_ref()
    }

    /// The object `D` of the indeterminate `x : T |- D`.
    pub fn indeterminate_target(&self) -> Result<&Object> {
        self.indeterminate
            .as_ref()
            .map(|x| &x.target)
            .ok_or(Error::NoIndeterminate)
    }

    pub fn has_atom(&self, name: &str) -> bool {
        self.atoms.contains(name)
    }

    pub fn check_object(&self, obj: &Object) -> Result<()> {
        match obj {
            Object::Terminal => Ok(()),
            Object::Atom(a) if self.atoms.contains(a) => Ok(()),
            Object::Atom(a) => Err(Error::UnknownIdentifier(a.to_string())),
            Object::Prod(l, r) | Object::Exp(l, r) => {
                self.check_object(l)?;
                self.check_object(r)
            }
        }
    }
}

/// Computes the type of a term bottom-up, rejecting ill-typed terms.
pub fn type_of(term: &Arrow, sig: &Signature) -> Result<ArrowType> {
    let ty = match term {
        Arrow::Const(name) => sig
            .const_type(name)
            .cloned()
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))?,
        Arrow::Indet(name) => match sig.indeterminate() {
            Some(x) if x.name == *name => ArrowType::new(Object::Terminal, x.target.clone()),
            _ => return Err(Error::UnknownIdentifier(name.to_string())),
        },
        Arrow::Id(a) => {
            sig.check_object(a)?;
            ArrowType::new(a.clone(), a.clone())
        }
        Arrow::Bang(a) => {
            sig.check_object(a)?;
            ArrowType::new(a.clone(), Object::Terminal)
        }
        Arrow::Proj(side, a, b) => {
            sig.check_object(a)?;
            sig.check_object(b)?;
            let target = match side {
                Side::First => a.clone(),
                Side::Second => b.clone(),
            };
            ArrowType::new(Object::prod(a.clone(), b.clone()), target)
        }
        Arrow::Eval(a, b) => {
            sig.check_object(a)?;
            sig.check_object(b)?;
            ArrowType::new(
                Object::prod(a.clone(), Object::exp(a.clone(), b.clone())),
                b.clone(),
            )
        }
        Arrow::Comp(after, before) => {
            let t_before = type_of(before, sig)?;
            let t_after = type_of(after, sig)?;
            if t_before.target != t_after.source {
                return Err(Error::mismatch(term, &t_after.source, &t_before.target));
            }
            ArrowType::new(t_before.source, t_after.target)
        }
        Arrow::Pair(fst, snd) => {
            let t1 = type_of(fst, sig)?;
            let t2 = type_of(snd, sig)?;
            if t1.source != t2.source {
                return Err(Error::mismatch(term, &t1.source, &t2.source));
            }
            ArrowType::new(t1.source, Object::prod(t1.target, t2.target))
        }
        Arrow::Curry(dom, ctx, body) => {
            sig.check_object(dom)?;
            sig.check_object(ctx)?;
            let tb = type_of(body, sig)?;
            let expected = Object::prod(dom.clone(), ctx.clone());
            if tb.source != expected {
                return Err(Error::mismatch(term, &expected, &tb.source));
            }
            ArrowType::new(ctx.clone(), Object::exp(dom.clone(), tb.target))
        }
    };
    Ok(ty)
}

/// Checks that two terms have the same type and returns it.
pub fn same_type(f: &Arrow, g: &Arrow, sig: &Signature) -> Result<ArrowType> {
    let tf = type_of(f, sig)?;
    let tg = type_of(g, sig)?;
    if tf != tg {
        return Err(Error::ArrowTypesDiffer {
            left: tf,
            right: tg,
        });
    }
    Ok(tf)
}

/// The abbreviations `f*g`, `f->g`, `phi g`, the associativity arrows and
/// the symmetry `c`, expanded literally into primitives.
pub mod derived {
    use super::*;

    /// `f*g = <f . p1_{A,C}, g . p2_{A,C}> : A*C |- B*D`
    pub fn times(f: &Arrow, g: &Arrow, sig: &Signature) -> Result<Arrow> {
        let tf = type_of(f, sig)?;
        let tg = type_of(g, sig)?;
        Ok(times_at(f.clone(), &tf.source, g.clone(), &tg.source))
    }

    pub(crate) fn times_at(f: Arrow, f_src: &Object, g: Arrow, g_src: &Object) -> Arrow {
        Arrow::pair(
            Arrow::comp(f, Arrow::p1(f_src.clone(), g_src.clone())),
            Arrow::comp(g, Arrow::p2(f_src.clone(), g_src.clone())),
        )
    }

    /// For `f : A |- B` and `g : C |- D`,
    /// `f->g = gamma_{A,B->C}(g . eps_{B,C} . (f * 1_{B->C})) : B->C |- A->D`.
    pub fn arrow(f: &Arrow, g: &Arrow, sig: &Signature) -> Result<Arrow> {
        let tf = type_of(f, sig)?;
        let tg = type_of(g, sig)?;
        let (a, b, c) = (tf.source, tf.target, tg.source);
        let bc = Object::exp(b.clone(), c.clone());
        let body = Arrow::comp(
            g.clone(),
            Arrow::comp(
                Arrow::Eval(b, c),
                times_at(f.clone(), &a, Arrow::Id(bc.clone()), &bc),
            ),
        );
        Ok(Arrow::curry(a, bc, body))
    }

    /// For `g : C |- A->B`, `phi_{A,B} g = eps_{A,B} . (1_A * g) : A*C |- B`.
    pub fn phi(g: &Arrow, sig: &Signature) -> Result<Arrow> {
        let tg = type_of(g, sig)?;
        let Some((a, b)) = tg.target.as_exp() else {
            return Err(Error::ShapeMismatch {
                term: Box::new(g.clone()),
                expected: "an exponential target",
                found: tg.target,
            });
        };
        Ok(phi_at(g.clone(), a, b, &tg.source))
    }

    pub(crate) fn phi_at(g: Arrow, a: &Object, b: &Object, c: &Object) -> Arrow {
        Arrow::comp(
            Arrow::Eval(a.clone(), b.clone()),
            times_at(Arrow::Id(a.clone()), a, g, c),
        )
    }

    /// `<p1_{A,B} . p1_{A*B,C}, p2_{A,B} * 1_C> : (A*B)*C |- A*(B*C)`
    pub fn assoc_left(a: &Object, b: &Object, c: &Object) -> Arrow {
        let ab = Object::prod(a.clone(), b.clone());
        Arrow::pair(
            Arrow::comp(
                Arrow::p1(a.clone(), b.clone()),
                Arrow::p1(ab.clone(), c.clone()),
            ),
            times_at(
                Arrow::p2(a.clone(), b.clone()),
                &ab,
                Arrow::Id(c.clone()),
                c,
            ),
        )
    }

    /// `<1_A * p1_{B,C}, p2_{B,C} . p2_{A,B*C}> : A*(B*C) |- (A*B)*C`
    pub fn assoc_right(a: &Object, b: &Object, c: &Object) -> Arrow {
        let bc = Object::prod(b.clone(), c.clone());
        Arrow::pair(
            times_at(
                Arrow::Id(a.clone()),
                a,
                Arrow::p1(b.clone(), c.clone()),
                &bc,
            ),
            Arrow::comp(
                Arrow::p2(b.clone(), c.clone()),
                Arrow::p2(a.clone(), bc.clone()),
            ),
        )
    }

    /// `c_{A,B} = <p2_{A,B}, p1_{A,B}> : A*B |- B*A`
    pub fn swap(a: &Object, b: &Object) -> Arrow {
        Arrow::pair(
            Arrow::p2(a.clone(), b.clone()),
            Arrow::p1(a.clone(), b.clone()),
        )
    }
}
