use super::{BinOp, Expr};

/// Binding strength of each node kind; children weaker than their slot
/// requires get parentheses.
fn strength(e: &Expr) -> u8 {
    match e {
        Expr::Binary(BinOp::Add | BinOp::Sub, ..) => 1,
        Expr::Binary(BinOp::Mul | BinOp::Div, ..) => 2,
        Expr::Neg(_) => 3,
        Expr::Binary(BinOp::Pow, ..) => 4,
        Expr::Const(_) | Expr::Var(_) | Expr::Call(..) => 5,
    }
}

pub(super) fn print(e: &Expr) -> String {
    let mut s = String::new();
    write(e, &mut s);
    s
}

fn child(e: &Expr, min: u8, out: &mut String) {
    if strength(e) < min {
        out.push('(');
        write(e, out);
        out.push(')');
    } else {
        write(e, out);
    }
}

fn write(e: &Expr, out: &mut String) {
    match e {
        Expr::Const(c) => out.push_str(&c.to_string()),
        Expr::Var(v) => out.push(v.name()),
        Expr::Neg(a) => {
            out.push('-');
            child(a, 3, out);
        }
        Expr::Call(f, a) => {
            out.push_str(f.name());
            out.push('(');
            write(a, out);
            out.push(')');
        }
        Expr::Binary(op, a, b) => {
            let (left, right) = match op {
                BinOp::Add | BinOp::Sub => (1, 2),
                BinOp::Mul | BinOp::Div => (2, 3),
                BinOp::Pow => (5, 3),
            };
            child(a, left, out);
            out.push(op.symbol());
            child(b, right, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcexpr::{parse, Func, Var};
    use proptest::prelude::*;

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0u32..1000, 0u32..4).prop_map(|(n, d)| Expr::Const(n as f64 / 10f64.powi(d as i32))),
            Just(Expr::Var(Var::X)),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Expr::negate),
                (0usize..14, inner.clone()).prop_map(|(i, e)| Expr::call(Func::ALL[i], e)),
                (
                    prop_oneof![
                        Just(BinOp::Add),
                        Just(BinOp::Sub),
                        Just(BinOp::Mul),
                        Just(BinOp::Div),
                        Just(BinOp::Pow)
                    ],
                    inner.clone(),
                    inner
                )
                    .prop_map(|(op, a, b)| Expr::binary(op, a, b)),
            ]
        })
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(parse("(2^3)^2").unwrap().to_string(), "(2^3)^2");
        assert_eq!(parse("2^(3^2)").unwrap().to_string(), "2^3^2");
        assert_eq!(parse("-(x^2)").unwrap().to_string(), "-x^2");
        assert_eq!(parse("(-x)^2").unwrap().to_string(), "(-x)^2");
        assert_eq!(parse("(x)").unwrap().to_string(), "x");
        assert_eq!(parse("x-(1-2)").unwrap().to_string(), "x-(1-2)");
        assert_eq!(parse("(x*2)/3").unwrap().to_string(), "x*2/3");
    }

    proptest! {
        #[test]
        fn parse_print_round_trip(e in arb_expr()) {
            let printed = e.to_string();
            prop_assert_eq!(parse(&printed).unwrap(), e, "printed as {}", printed);
        }
    }
}
