use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use beauville::beauville::{check_unmixed, intersection_exact, TypeTriple, Verdict};
use beauville::constructions::{wallpaper_quotient, Ab2, H4, H4Elem};
use beauville::group::generated_subgroup;
use beauville::matrix::{parse_mat, Mat2, Psl2, Sl2};
use beauville::perm::{bsgs_order, parse_cycles, Parity, Perm, Sym};
use beauville::reality::{iota_pair, reality_mixed_exhaustive, reality_mixed_h4, reality_unmixed, sigma_relation_violations};
use beauville::search::{enumerate_unmixed, search, SearchMode, UnmixedOptions, UnmixedSpace};
use beauville::structure::Structure;
use beauville::{Caps, FiniteGroup};

fn rand_pair<G: FiniteGroup>(g: &G, seed: u64) -> (G::Elem, G::Elem) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (g.random_elem(&mut rng), g.random_elem(&mut rng))
}

fn sigma_of<G: FiniteGroup>(g: &G, p: &(G::Elem, G::Elem)) -> std::collections::HashSet<G::Elem> {
    beauville::beauville::sigma_exact_under(g, &g.generators(), &p.0, &p.1, 1_000_000).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sigma_relations_in_every_backend(seed in any::<u64>()) {
        let s7 = Sym::new(7).unwrap();
        prop_assert!(sigma_relation_violations(&s7, &rand_pair(&s7, seed)).unwrap().is_empty());
        let sl = Sl2::new(13).unwrap();
        prop_assert!(sigma_relation_violations(&sl, &rand_pair(&sl, seed)).unwrap().is_empty());
        let ab = Ab2::new(11).unwrap();
        prop_assert!(sigma_relation_violations(&ab, &rand_pair(&ab, seed)).unwrap().is_empty());
        let w = wallpaper_quotient(6, 4).unwrap();
        prop_assert!(sigma_relation_violations(&w, &rand_pair(&w, seed)).unwrap().is_empty());
        let h = H4::new(Psl2::new(5).unwrap());
        prop_assert!(sigma_relation_violations(&h, &rand_pair(&h, seed)).unwrap().is_empty());
    }

    #[test]
    fn inversion_preserves_sigma_and_mu(seed in any::<u64>()) {
        let g = Psl2::new(11).unwrap();
        let p = rand_pair(&g, seed);
        let q = iota_pair(&g, &p);
        prop_assert_eq!(sigma_of(&g, &p), sigma_of(&g, &q));
        prop_assert_eq!(TypeTriple::of(&g, &p.0, &p.1).mu(), TypeTriple::of(&g, &q.0, &q.1).mu());
        let s = Sym::new(6).unwrap();
        let p = rand_pair(&s, seed);
        prop_assert_eq!(sigma_of(&s, &p), sigma_of(&s, &iota_pair(&s, &p)));
    }

    #[test]
    fn ladder_matches_exact(seed in any::<u64>()) {
        let caps = Caps::default();
        let g = Sym::new(6).unwrap();
        let (a1, c1) = rand_pair(&g, seed);
        let (a2, c2) = rand_pair(&g, seed.wrapping_add(1));
        let r = check_unmixed(&g, &a1, &c1, &a2, &c2, &caps).unwrap();
        let exact = intersection_exact(&g, &g.generators(), (&a1, &c1), (&a2, &c2), &caps).unwrap().trivial;
        let by_ladder = r.condition("sigma-intersection").unwrap().ok;
        prop_assert_eq!(by_ladder, exact);
    }

    #[test]
    fn cycle_literals_round_trip(seed in any::<u64>(), n in 2usize..12) {
        let g = Sym::new(n).unwrap();
        let (x, y) = rand_pair(&g, seed);
        prop_assert_eq!(parse_cycles(&g.format_elem(&x), n).unwrap(), x.clone());
        let par = |p: &Perm| p.parity() == Parity::Even;
        prop_assert_eq!(par(&x.mul(&y)), par(&x) == par(&y));
        prop_assert!(x.mul(&x.inverse()).is_identity());
    }

    #[test]
    fn matrix_literals_round_trip(seed in any::<u64>()) {
        let g = Sl2::new(13).unwrap();
        let (x, y) = rand_pair(&g, seed);
        prop_assert_eq!(parse_mat(&g.format_elem(&x), 13).unwrap(), x);
        prop_assert_eq!(x.mul(&y, 13).det(13), 1);
        prop_assert_eq!(x.mul(&x.inverse(13).unwrap(), 13), Mat2::identity());
    }

    #[test]
    fn stabilizer_chain_matches_closure(seed in any::<u64>()) {
        let g = Sym::new(6).unwrap();
        let (x, y) = rand_pair(&g, seed);
        let closure = generated_subgroup(&g, &[x.clone(), y.clone()], 1000).unwrap().len();
        prop_assert_eq!(bsgs_order(&[x, y]).unwrap(), num_bigint::BigUint::from(closure));
    }

    #[test]
    fn structure_json_round_trips(x in 0u32..7, y in 0u32..7, z in 0u32..7, t in 0u32..7) {
        let s = Structure::Unmixed {
            group: "ab2:7".parse().unwrap(),
            a1: "(1,0)".into(),
            c1: "(0,1)".into(),
            a2: format!("({x},{y})"),
            c2: format!("({z},{t})"),
            extra: Default::default(),
        };
        prop_assert_eq!(Structure::from_json(&s.to_json()).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn canonical_form_is_idempotent(i in 0usize..1000) {
        let caps = Caps::default();
        let g = Ab2::new(7).unwrap();
        let all = enumerate_unmixed(&g, &UnmixedOptions::default(), &caps).unwrap().structures;
        let v = &all[i % all.len()];
        let us = UnmixedSpace::new(&g, &caps).unwrap();
        let c = us.canonical_structure(v, &caps).unwrap();
        prop_assert_eq!(us.canonical_structure(&c, &caps).unwrap(), c);
        let r = check_unmixed(&g, &c[0], &c[1], &c[2], &c[3], &caps).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn verdict_implications(i in 0usize..1000) {
        let caps = Caps::default();
        let g = Psl2::new(7).unwrap();
        let all = enumerate_unmixed(&g, &UnmixedOptions::default(), &caps).unwrap().structures;
        let v = reality_unmixed(&g, &all[i % all.len()], &caps).unwrap();
        prop_assert!(v.consistent());
    }

    #[test]
    fn seeded_search_is_deterministic(seed in any::<u64>()) {
        let caps = Caps { table: 100, ..Caps::default() };
        let desc = "alt:7".parse().unwrap();
        let mode = SearchMode::Unmixed(UnmixedOptions { limit: Some(1), ..Default::default() });
        let a = search(&desc, &mode, seed, 300, &caps).unwrap().without_timing().to_json();
        let b = search(&desc, &mode, seed, 300, &caps).unwrap().without_timing().to_json();
        prop_assert_eq!(a, b);
    }
}

/// The product rule on `H_[4]` agrees with a search over all extensions of `a → a⁻¹, c → c⁻¹`.
#[test]
fn h4_reality_agrees_with_exhaustive() {
    let caps = Caps::default();
    let h = Psl2::new(7).unwrap();
    let g = H4::new(h.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut compared, mut yes) = (0, 0);
    while compared < 16 {
        let e: Vec<Mat2> = (0..4).map(|_| h.random_elem(&mut rng)).collect();
        let a = H4Elem::new(e[0], e[1], 2);
        let c = H4Elem::new(e[2], e[3], 2);
        if generated_subgroup(&g, &[a.clone(), c.clone()], 100_000).unwrap().len() != 2 * 168 * 168 {
            continue;
        }
        let by_rule = reality_mixed_h4(&g, &a, &c, &caps).unwrap();
        let brute = reality_mixed_exhaustive(&g, &a, &c, &g.coset_rep(), &caps).unwrap();
        assert_eq!(by_rule.biholo_conjugate, brute.biholo_conjugate, "a = {a:?}, c = {c:?}");
        compared += 1;
        yes += usize::from(brute.biholo_conjugate == Some(true));
    }
    assert!(yes > 0 && yes < compared, "both outcomes should occur: {yes}/{compared}");
}
