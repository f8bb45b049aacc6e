use proptest::prelude::*;
use sl3_rational::{fmt_q, frac, parse_q, pos, pos3, Q};

#[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
struct Holder {
    #[serde(with = "sl3_rational::wire")]
    x: Q,
    #[serde(with = "sl3_rational::wire_pair")]
    d: [Q; 2],
}

proptest! {
    #[test]
    fn print_parse(n in -1000i64..1000, d in 1i64..50) {
        let x = frac(n, d);
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }

    #[test]
    fn json_roundtrip(n in -50i64..50, d in 1i64..9, m in -9i64..9) {
        let h = Holder { x: frac(n, d), d: [frac(m, d), frac(n, 3)] };
        let s = serde_json::to_string(&h).unwrap();
        let back: Holder = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn bracket_identity(a in -20i64..20, b in -20i64..20, c in -20i64..20) {
        // [x,y,z]_+ = [x + [y + [z]_+]_+]_+
        let (x, y, z) = (frac(a, 2), frac(b, 3), frac(c, 5));
        let nested = pos(&(&x + pos(&(&y + pos(&z)))));
        prop_assert_eq!(pos3(&x, &y, &z), nested);
    }
}
