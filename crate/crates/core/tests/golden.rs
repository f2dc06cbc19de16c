use distfourier::dist::{frac_derivative, ft, ift, parse_expr, parse_expr_in};
use distfourier::sinc::sincint;
use distfourier::{Domain, ExactValue, Range, Rational};

fn lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
}

#[test]
fn sinc_integrals() {
    let text = include_str!("golden/sincint.txt");
    let mut count = 0;
    for line in lines(text) {
        let mut parts = line.splitn(4, ' ');
        let range: Range = parts.next().unwrap().parse().unwrap();
        let n: u32 = parts.next().unwrap().parse().unwrap();
        let m: u32 = parts.next().unwrap().parse().unwrap();
        let expected = parts.next().unwrap();
        match sincint(n, m, range) {
            Ok(v) => {
                assert_eq!(v.to_string(), expected, "{line}");
                assert_eq!(expected.parse::<ExactValue>().unwrap(), v, "{line}");
            }
            Err(_) => assert_eq!(expected, "divergent", "{line}"),
        }
        count += 1;
    }
    assert_eq!(count, 16);
}

#[test]
fn misprint_is_annotated() {
    let text = include_str!("golden/sincint.txt");
    assert!(text.contains("\"π/4 π\""));
    assert!(text.contains("half 3 1 1/4*pi"));
}

#[test]
fn transforms() {
    let text = include_str!("golden/transforms.txt");
    for line in lines(text) {
        let cols: Vec<&str> = line.split(" | ").collect();
        let (op, input, expected) = (cols[0], cols[1], cols[2]);
        let got = match op.split_once(' ') {
            None if op == "ft" => ft(&parse_expr(input).unwrap()).unwrap(),
            None if op == "ifft" => ift(&parse_expr_in(input, Domain::K).unwrap()).unwrap(),
            Some(("fracderiv", alpha)) => {
                let alpha: Rational = alpha.parse().unwrap();
                frac_derivative(&parse_expr(input).unwrap(), &alpha).unwrap()
            }
            _ => panic!("unknown op {op}"),
        };
        assert_eq!(got.to_string(), expected, "{line}");
    }
}
