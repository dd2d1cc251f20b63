use chain_semiring::derivations::{delta, delta_value, leibniz_at, maps_commute, shift_derivation};
use chain_semiring::strings::{StringIndexM, StringType2, SubfamilyKind};
use chain_semiring::{Chain, ChainEndomorphism};
use proptest::prelude::*;

fn endo(n: usize) -> impl Strategy<Value = ChainEndomorphism> {
    prop::collection::vec(0..n, n).prop_map(move |mut v| {
        v.sort_unstable();
        Chain::new(n).unwrap().endomorphism(&v).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (ChainEndomorphism, ChainEndomorphism, ChainEndomorphism)> {
    (1usize..=9).prop_flat_map(|n| (endo(n), endo(n), endo(n)))
}

fn string2() -> impl Strategy<Value = (StringType2, usize, usize, usize)> {
    (2usize..=10)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, b)| (Just(n), 0..b, Just(b), 0..=n, 0..=n, 0..=n))
        .prop_map(|(n, a, b, l, x, y)| {
            (
                StringType2::new(Chain::new(n).unwrap(), a, b).unwrap(),
                l,
                x,
                y,
            )
        })
}

proptest! {
    #[test]
    fn semiring_laws((x, y, z) in triple()) {
        prop_assert_eq!(x.join(&y), y.join(&x));
        prop_assert_eq!(x.join(&x), x.clone());
        prop_assert_eq!(x.join(&y).join(&z), x.join(&y.join(&z)));
        prop_assert_eq!(x.then(&y).then(&z), x.then(&y.then(&z)));
        prop_assert_eq!(x.then(&y.join(&z)), x.then(&y).join(&x.then(&z)));
        prop_assert_eq!(y.join(&z).then(&x), y.then(&x).join(&z.then(&x)));
        prop_assert!(x.leq(&x.join(&y)).unwrap());
    }

    #[test]
    fn apply_agrees_with_then((x, y, _z) in triple()) {
        let xy = x.then(&y);
        for i in 0..x.chain().len() {
            prop_assert_eq!(xy.apply(i), y.apply(x.apply(i)));
        }
    }

    #[test]
    fn delta_is_leibniz_on_type2((s, l, i, j) in string2()) {
        let d = delta(s.element(l).unwrap(), s.carrier()).unwrap();
        let (x, y) = (s.element(i).unwrap(), s.element(j).unwrap());
        prop_assert_eq!(leibniz_at(&d, x, y).unwrap(), None);
        prop_assert_eq!(delta_value(s.element(l).unwrap(), &x.join(y)), delta_value(s.element(l).unwrap(), x).join(&delta_value(s.element(l).unwrap(), y)));
    }

    #[test]
    fn delta_is_symmetric((s, l, i, _j) in string2()) {
        let (alpha, x) = (s.element(l).unwrap(), s.element(i).unwrap());
        prop_assert_eq!(delta_value(alpha, x), delta_value(x, alpha));
    }

    #[test]
    fn deltas_commute((s, l, i, _j) in string2()) {
        let d1 = delta(s.element(l).unwrap(), s.carrier()).unwrap();
        let d2 = delta(s.element(i).unwrap(), s.carrier()).unwrap();
        prop_assert_eq!(maps_commute(&d1, &d2).unwrap(), None);
    }

    #[test]
    fn classification_matches_square((s, _l, k, _j) in string2()) {
        let x = s.element(k).unwrap();
        let sq = x.then(x);
        let kind = match s.classify(k).unwrap() {
            chain_semiring::strings::Classification::ANilpotent => SubfamilyKind::ANilpotents,
            chain_semiring::strings::Classification::Idempotent => SubfamilyKind::Idempotents,
            chain_semiring::strings::Classification::BNilpotent => SubfamilyKind::BNilpotents,
        };
        let expected = match kind {
            SubfamilyKind::ANilpotents => s.element(0).unwrap(),
            SubfamilyKind::BNilpotents => s.element(s.n()).unwrap(),
            _ => x,
        };
        prop_assert_eq!(&sq, expected);
    }

    #[test]
    fn shift_lowers_index((s, _l, k, _j) in string2()) {
        let d = shift_derivation(&s);
        let got = d.apply(s.element(k).unwrap()).unwrap();
        prop_assert_eq!(got, s.element(k.saturating_sub(1)).unwrap());
    }

    #[test]
    fn type_m_index_round_trip(n in 2usize..=12, m in 2usize..=12, p in 0usize..200) {
        prop_assume!(p <= (m - 1) * n);
        let idx = StringIndexM::from_position(p, n);
        prop_assert_eq!(idx.position(n), p);
        prop_assert_eq!(StringIndexM::new(idx.k(), idx.l(), n, m).unwrap(), idx);
        if idx.k() == n && idx.l() < m {
            prop_assert_eq!(StringIndexM::new(0, idx.l() + 1, n, m).unwrap(), idx);
        }
    }
}
