use super::{BinOp, Expr, Func};

/// Poles of the tangent closer than this are treated as undefined.
const POLE_EPS: f64 = 1e-12;

pub(super) fn eval(e: &Expr, v: f64) -> Option<f64> {
    let out = match e {
        Expr::Const(c) => *c,
        Expr::Var(_) => v,
        Expr::Neg(a) => -eval(a, v)?,
        Expr::Binary(op, a, b) => {
            let (a, b) = (eval(a, v)?, eval(b, v)?);
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => a / b,
                BinOp::Pow => a.powf(b),
            }
        }
        Expr::Call(f, a) => call(*f, eval(a, v)?)?,
    };
    out.is_finite().then_some(out)
}

fn call(f: Func, a: f64) -> Option<f64> {
    let y = match f {
        Func::Sin => a.sin(),
        Func::Cos => a.cos(),
        Func::Tg => {
            if a.cos().abs() < POLE_EPS {
                return None;
            }
            a.tan()
        }
        Func::Sh => a.sinh(),
        Func::Ch => a.cosh(),
        Func::Th => a.tanh(),
        Func::Ln if a > 0.0 => a.ln(),
        Func::Lg if a > 0.0 => a.log10(),
        Func::Ln | Func::Lg => return None,
        Func::Exp => a.exp(),
        Func::Sqrt if a >= 0.0 => a.sqrt(),
        Func::Sqrt => return None,
        Func::Mod => a.abs(),
        Func::Arcsin | Func::Arccos if !(-1.0..=1.0).contains(&a) => return None,
        Func::Arcsin => a.asin(),
        Func::Arccos => a.acos(),
        Func::Arctg => a.atan(),
    };
    Some(y)
}

#[cfg(test)]
mod tests {
    use crate::funcexpr::parse;

    fn at(s: &str, x: f64) -> Option<f64> {
        parse(s).unwrap().eval(x)
    }

    #[test]
    fn examples() {
        assert_eq!(at("sin(x)", 0.0), Some(0.0));
        assert_eq!(at("lg(x)", 100.0), Some(2.0));
        assert_eq!(at("mod(x)", -3.5), Some(3.5));
        assert_eq!(at("ln(x)", -1.0), None);
        assert_eq!(at("sqrt(x)", -1.0), None);
        assert_eq!(at("arcsin(x)", 1.5), None);
        assert_eq!(at("1/x", 0.0), None);
        assert_eq!(at("x^0.5", -4.0), None);
        assert_eq!(at("tg(x)", std::f64::consts::FRAC_PI_2), None);
        assert_eq!(at("exp(x)", 1000.0), None);
        assert_eq!(at("th(x)", 0.0), Some(0.0));
        assert_eq!(at("ch(x)", 0.0), Some(1.0));
    }
}
