//! Typed lambda terms, the translation of arrow terms into them, and
//! normalization by evaluation to beta-eta-long normal form.
//!
//! Variables are de Bruijn levels: `Var(0)` is bound by the outermost
//! abstraction. Normal forms are fully eta-expanded at arrow and product
//! types, and every subterm of type `T` is `Unit`, so two terms are
//! beta-eta equal exactly when their normal forms are identical.

use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::syntax::{same_type, type_of, Arrow, ArrowType, Name, Object, Side, Signature};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Lambda {
    Var(usize),
    Abs(Object, Arc<Lambda>),
    App(Arc<Lambda>, Arc<Lambda>),
    Pair(Arc<Lambda>, Arc<Lambda>),
    Fst(Arc<Lambda>),
    Snd(Arc<Lambda>),
    Unit,
    /// A free constant with its lambda type: `A -> B` for an arrow constant
    /// `A |- B`, and `D` for the indeterminate `T |- D`.
    Const(Name, Object),
}

impl Lambda {
    fn abs(dom: Object, body: Lambda) -> Lambda {
        Lambda::Abs(dom, Arc::new(body))
    }
    fn app(f: Lambda, a: Lambda) -> Lambda {
        Lambda::App(Arc::new(f), Arc::new(a))
    }
    fn pair(a: Lambda, b: Lambda) -> Lambda {
        Lambda::Pair(Arc::new(a), Arc::new(b))
    }
    fn fst(t: Lambda) -> Lambda {
        Lambda::Fst(Arc::new(t))
    }
    fn snd(t: Lambda) -> Lambda {
        Lambda::Snd(Arc::new(t))
    }

    pub fn size(&self) -> usize {
        match self {
            Lambda::Var(_) | Lambda::Unit | Lambda::Const(..) => 1,
            Lambda::Abs(_, b) | Lambda::Fst(b) | Lambda::Snd(b) => 1 + b.size(),
            Lambda::App(a, b) | Lambda::Pair(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_lambda(f, self, 0)
    }
}

fn write_lambda(f: &mut fmt::Formatter<'_>, t: &Lambda, depth: usize) -> fmt::Result {
    match t {
        Lambda::Var(l) => write!(f, "v{l}"),
        Lambda::Abs(dom, body) => {
            write!(f, "(\\v{depth}: {dom}. ")?;
            write_lambda(f, body, depth + 1)?;
            f.write_str(")")
        }
        Lambda::App(a, b) => {
            f.write_str("(")?;
            write_lambda(f, a, depth)?;
            f.write_str(" ")?;
            write_lambda(f, b, depth)?;
            f.write_str(")")
        }
        Lambda::Pair(a, b) => {
            f.write_str("<")?;
            write_lambda(f, a, depth)?;
            f.write_str(", ")?;
            write_lambda(f, b, depth)?;
            f.write_str(">")
        }
        Lambda::Fst(t) => {
            f.write_str("fst ")?;
            write_lambda(f, t, depth)
        }
        Lambda::Snd(t) => {
            f.write_str("snd ")?;
            write_lambda(f, t, depth)
        }
        Lambda::Unit => f.write_str("()"),
        Lambda::Const(n, _) => f.write_str(n),
    }
}

/// Infers the type of a term whose free variables have the given types.
pub fn infer(term: &Lambda, ctx: &mut Vec<Object>) -> Result<Object> {
    let ill = |msg: String| Error::IllTypedLambda(msg);
    match term {
        Lambda::Var(l) => ctx
            .get(*l)
            .cloned()
            .ok_or_else(|| ill(format!("unbound level {l}"))),
        Lambda::Abs(dom, body) => {
            ctx.push(dom.clone());
            let cod = infer(body, ctx);
            ctx.pop();
            Ok(Object::exp(dom.clone(), cod?))
        }
        Lambda::App(fun, arg) => {
            let tf = infer(fun, ctx)?;
            let ta = infer(arg, ctx)?;
            match tf.as_exp() {
                Some((d, c)) if *d == ta => Ok(c.clone()),
                _ => Err(ill(format!("cannot apply {tf} to {ta}"))),
            }
        }
        Lambda::Pair(a, b) => Ok(Object::prod(infer(a, ctx)?, infer(b, ctx)?)),
        Lambda::Fst(t) | Lambda::Snd(t) => {
            let ty = infer(t, ctx)?;
            match (ty.as_prod(), term) {
                (Some((l, _)), Lambda::Fst(_)) => Ok(l.clone()),
                (Some((_, r)), _) => Ok(r.clone()),
                (None, _) => Err(ill(format!("projection from {ty}"))),
            }
        }
        Lambda::Unit => Ok(Object::Terminal),
        Lambda::Const(_, ty) => Ok(ty.clone()),
    }
}

/// Translates `f : A |- B` into a closed lambda term of type `A -> B`.
pub fn to_lambda(f: &Arrow, sig: &Signature) -> Result<Lambda> {
    type_of(f, sig)?;
    Ok(translate(f, sig, 0)?.0)
}

/// The translation placed under `depth` binders, so its own binder has
/// level `depth`.
fn translate(f: &Arrow, sig: &Signature, depth: usize) -> Result<(Lambda, ArrowType)> {
    let v = Lambda::Var(depth);
    let ty = type_of(f, sig)?;
    let body = match f {
        Arrow::Id(_) => v,
        Arrow::Bang(_) => Lambda::Unit,
        Arrow::Proj(Side::First, ..) => Lambda::fst(v),
        Arrow::Proj(Side::Second, ..) => Lambda::snd(v),
        Arrow::Eval(..) => Lambda::app(Lambda::snd(v.clone()), Lambda::fst(v)),
        Arrow::Const(name) => Lambda::app(
            Lambda::Const(
                name.clone(),
                Object::exp(ty.source.clone(), ty.target.clone()),
            ),
            v,
        ),
        Arrow::Indet(name) => Lambda::Const(name.clone(), ty.target.clone()),
        Arrow::Comp(after, before) => {
            let (lb, _) = translate(before, sig, depth + 1)?;
            let (la, _) = translate(after, sig, depth + 1)?;
            Lambda::app(la, Lambda::app(lb, v))
        }
        Arrow::Pair(a, b) => {
            let (la, _) = translate(a, sig, depth + 1)?;
            let (lb, _) = translate(b, sig, depth + 1)?;
            Lambda::pair(Lambda::app(la, v.clone()), Lambda::app(lb, v))
        }
        Arrow::Curry(dom, _, body) => {
            let (lbody, _) = translate(body, sig, depth + 2)?;
            let inner = Lambda::app(lbody, Lambda::pair(Lambda::Var(depth + 1), v));
            Lambda::abs(dom.clone(), inner)
        }
    };
    Ok((Lambda::abs(ty.source.clone(), body), ty))
}

#[derive(Clone)]
enum Value {
    Closure(Rc<Vec<Rc<Value>>>, Arc<Lambda>),
    Pair(Rc<Value>, Rc<Value>),
    Unit,
    /// A stuck term, tagged with its type.
    Neutral(Rc<Neutral>, Object),
}

enum Neutral {
    Var(usize),
    Const(Name, Object),
    App(Rc<Neutral>, Rc<Value>, Object),
    Fst(Rc<Neutral>),
    Snd(Rc<Neutral>),
}

// Only reached on ill-typed input, which `nf` rules out by inferring first.
const TYPED: &str = "normalizer invariant: input was type-checked";

fn eval(env: &Rc<Vec<Rc<Value>>>, term: &Lambda) -> Rc<Value> {
    match term {
        Lambda::Var(l) => env.get(*l).expect(TYPED).clone(),
        Lambda::Abs(_, body) => Rc::new(Value::Closure(env.clone(), body.clone())),
        Lambda::App(f, a) => apply(eval(env, f), eval(env, a)),
        Lambda::Pair(a, b) => Rc::new(Value::Pair(eval(env, a), eval(env, b))),
        Lambda::Fst(t) => project(eval(env, t), Side::First),
        Lambda::Snd(t) => project(eval(env, t), Side::Second),
        Lambda::Unit => Rc::new(Value::Unit),
        Lambda::Const(name, ty) => Rc::new(Value::Neutral(
            Rc::new(Neutral::Const(name.clone(), ty.clone())),
            ty.clone(),
        )),
    }
}

fn apply(fun: Rc<Value>, arg: Rc<Value>) -> Rc<Value> {
    match &*fun {
        Value::Closure(env, body) => {
            let mut env = (**env).clone();
            env.push(arg);
            eval(&Rc::new(env), body)
        }
        Value::Neutral(n, ty) => {
            let (dom, cod) = ty.as_exp().expect(TYPED);
            Rc::new(Value::Neutral(
                Rc::new(Neutral::App(n.clone(), arg, dom.clone())),
                cod.clone(),
            ))
        }
        _ => panic!("{TYPED}"),
    }
}

fn project(v: Rc<Value>, side: Side) -> Rc<Value> {
    match (&*v, side) {
        (Value::Pair(a, _), Side::First) => a.clone(),
        (Value::Pair(_, b), Side::Second) => b.clone(),
        (Value::Neutral(n, ty), _) => {
            let (l, r) = ty.as_prod().expect(TYPED);
            let (n, ty) = match side {
                Side::First => (Neutral::Fst(n.clone()), l.clone()),
                Side::Second => (Neutral::Snd(n.clone()), r.clone()),
            };
            Rc::new(Value::Neutral(Rc::new(n), ty))
        }
        _ => panic!("{TYPED}"),
    }
}

/// Type-directed readback: eta-expands at `->` and `*`, collapses `T`.
fn reify(depth: usize, ty: &Object, v: Rc<Value>) -> Lambda {
    match ty {
        Object::Terminal => Lambda::Unit,
        Object::Prod(l, r) => Lambda::pair(
            reify(depth, l, project(v.clone(), Side::First)),
            reify(depth, r, project(v, Side::Second)),
        ),
        Object::Exp(dom, cod) => {
            let fresh = Rc::new(Value::Neutral(
                Rc::new(Neutral::Var(depth)),
                (**dom).clone(),
            ));
            Lambda::abs((**dom).clone(), reify(depth + 1, cod, apply(v, fresh)))
        }
        Object::Atom(_) => match &*v {
            Value::Neutral(n, _) => reify_neutral(depth, n),
            _ => panic!("{TYPED}"),
        },
    }
}

fn reify_neutral(depth: usize, n: &Neutral) -> Lambda {
    match n {
        Neutral::Var(l) => Lambda::Var(*l),
        Neutral::Const(name, ty) => Lambda::Const(name.clone(), ty.clone()),
        Neutral::App(f, arg, dom) => {
            Lambda::app(reify_neutral(depth, f), reify(depth, dom, arg.clone()))
        }
        Neutral::Fst(t) => Lambda::fst(reify_neutral(depth, t)),
        Neutral::Snd(t) => Lambda::snd(reify_neutral(depth, t)),
    }
}

/// The beta-eta-long normal form of a closed term.
pub fn nf(term: &Lambda) -> Result<Lambda> {
    let ty = infer(term, &mut Vec::new())?;
    let v = eval(&Rc::new(Vec::new()), term);
    Ok(reify(0, &ty, v))
}

/// The normal form of the lambda image of an arrow term.
pub fn normal_form(f: &Arrow, sig: &Signature) -> Result<Lambda> {
    nf(&to_lambda(f, sig)?)
}

/// Decides equality in the free cartesian closed category over `sig`
/// (with the indeterminate, if any, treated as a free point).
pub fn arrows_equal(f: &Arrow, g: &Arrow, sig: &Signature) -> Result<bool> {
    same_type(f, g, sig)?;
    Ok(normal_form(f, sig)? == normal_form(g, sig)?)
}

/// Reads a normal form of type `A -> B` back as an arrow `A |- B` built
/// from primitives, with identity compositions removed.
pub fn simplify(f: &Arrow, sig: &Signature) -> Result<Arrow> {
    let ty = type_of(f, sig)?;
    let n = normal_form(f, sig)?;
    let Lambda::Abs(_, body) = &n else {
        panic!("{TYPED}")
    };
    let ctx = vec![ty.source.clone()];
    Ok(tidy(readback(sig, &ctx, body)))
}

fn context_object(ctx: &[Object]) -> Object {
    let mut it = ctx.iter();
    let mut acc = it.next().expect("nonempty context").clone();
    for o in it {
        acc = Object::prod(o.clone(), acc);
    }
    acc
}

/// Arrow from the context object to the type of `t`. The context
/// `[A0, .., An]` is represented by `An * (.. * (A1 * A0))`.
fn readback(sig: &Signature, ctx: &[Object], t: &Lambda) -> Arrow {
    let here = context_object(ctx);
    match t {
        Lambda::Var(l) => {
            let mut arrow = Arrow::Id(here.clone());
            let mut obj = here;
            for level in (0..ctx.len()).rev() {
                let (head, rest) = match obj.as_prod() {
                    Some((h, r)) if level > 0 => (h.clone(), r.clone()),
                    _ => break,
                };
                if level == *l {
                    return Arrow::comp(Arrow::p1(head, rest), arrow);
                }
                arrow = Arrow::comp(Arrow::p2(head, rest.clone()), arrow);
                obj = rest;
            }
            arrow
        }
        Lambda::Abs(dom, body) => {
            let mut inner = ctx.to_vec();
            inner.push(dom.clone());
            Arrow::curry(dom.clone(), here, readback(sig, &inner, body))
        }
        Lambda::App(fun, arg) => {
            if let Lambda::Const(name, _) = &**fun {
                if sig.const_type(name).is_some() {
                    return Arrow::comp(Arrow::Const(name.clone()), readback(sig, ctx, arg));
                }
            }
            let fty = infer(fun, &mut ctx.to_vec()).expect(TYPED);
            let (dom, cod) = fty.as_exp().expect(TYPED);
            Arrow::comp(
                Arrow::Eval(dom.clone(), cod.clone()),
                Arrow::pair(readback(sig, ctx, arg), readback(sig, ctx, fun)),
            )
        }
        Lambda::Pair(a, b) => Arrow::pair(readback(sig, ctx, a), readback(sig, ctx, b)),
        Lambda::Fst(p) | Lambda::Snd(p) => {
            let pty = infer(p, &mut ctx.to_vec()).expect(TYPED);
            let (l, r) = pty.as_prod().expect(TYPED);
            let proj = match t {
                Lambda::Fst(_) => Arrow::p1(l.clone(), r.clone()),
                _ => Arrow::p2(l.clone(), r.clone()),
            };
            Arrow::comp(proj, readback(sig, ctx, p))
        }
        Lambda::Unit => Arrow::Bang(here),
        Lambda::Const(name, ty) => match ty.as_exp() {
            // An unapplied arrow constant `c : A |- B` as a point of `A -> B`.
            Some((a, _)) if sig.const_type(name).is_some() => Arrow::curry(
                a.clone(),
                here.clone(),
                Arrow::comp(Arrow::Const(name.clone()), Arrow::p1(a.clone(), here)),
            ),
            _ => Arrow::comp(Arrow::Indet(name.clone()), Arrow::Bang(here)),
        },
    }
}

/// Drops compositions with identities.
fn tidy(a: Arrow) -> Arrow {
    match a {
        Arrow::Comp(after, before) => {
            let after = tidy((*after).clone());
            let before = tidy((*before).clone());
            match (&after, &before) {
                (Arrow::Id(_), _) => before,
                (_, Arrow::Id(_)) => after,
                _ => Arrow::comp(after, before),
            }
        }
        Arrow::Pair(a, b) => Arrow::pair(tidy((*a).clone()), tidy((*b).clone())),
        Arrow::Curry(d, c, body) => Arrow::curry(d, c, tidy((*body).clone())),
        other => other,
    }
}
