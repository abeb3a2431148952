//! The polynomial category: arrows that may mention the indeterminate
//! `x : T |- D`, their equality, the heritage functor, and instantiation of
//! `x` by a point of `D`.
//!
//! An arrow of the polynomial category is represented by any term of its
//! equivalence class. Base-category operations and their counterparts on
//! polynomial arrows share one syntax, so the coincidences between them
//! hold by construction.

use crate::error::{Error, Result};
use crate::lambda::arrows_equal;
use crate::syntax::{type_of, Arrow, ArrowType, Object, Signature};

/// A base-category arrow viewed in the polynomial category.
pub fn heritage(f: &Arrow) -> Result<Arrow> {
    f.require_pure()?;
    Ok(f.clone())
}

/// Equality of polynomial arrows: the indeterminate is a free point.
pub fn poly_equal(f: &Arrow, g: &Arrow, sig: &Signature) -> Result<bool> {
    arrows_equal(f, g, sig)
}

/// The unique structure-preserving functor to the base category that sends
/// `x` to `point` and fixes base-category arrows: substitutes `point` for
/// every occurrence of the indeterminate.
pub fn instantiate(f: &Arrow, point: &Arrow, sig: &Signature) -> Result<Arrow> {
    point.require_pure()?;
    let expected = ArrowType::new(Object::Terminal, sig.indeterminate_target()?.clone());
    let found = type_of(point, sig)?;
    if found.source != expected.source {
        return Err(Error::mismatch(point, &expected.source, &found.source));
    }
    if found.target != expected.target {
        return Err(Error::mismatch(point, &expected.target, &found.target));
    }
    type_of(f, sig)?;
    Ok(substitute(f, point))
}

fn substitute(f: &Arrow, point: &Arrow) -> Arrow {
    match f {
        Arrow::Indet(_) => point.clone(),
        Arrow::Comp(a, b) => Arrow::comp(substitute(a, point), substitute(b, point)),
        Arrow::Pair(a, b) => Arrow::pair(substitute(a, point), substitute(b, point)),
        Arrow::Curry(dom, ctx, body) => {
            Arrow::curry(dom.clone(), ctx.clone(), substitute(body, point))
        }
        other => other.clone(),
    }
}
