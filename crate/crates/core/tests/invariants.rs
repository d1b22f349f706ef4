use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::subsequence;

use reslat::algebra::laws::check_all;
use reslat::algebra::{
    gamma_closure, generated_subalgebra, is_closure_operator, monoidal_preorder, properties, skeleton,
    validate,
};
use reslat::chains::{check_laced_compatible, compile, recover_code, LacedCode, Letter};
use reslat::constructions::{
    abs_chain, catalan_decompose, catalan_sum, check_partial_preservation, enumerate_catalan, fep_closure,
    sugihara_from_involution, tensor, SkeletonDecomposition,
};
use reslat::counting::{count_ic_closed, count_ic_formula, count_ic_recurrence};
use reslat::oracle::{canonical, is_isomorphic};
use reslat::FinAlgebra;

fn code(max_len: usize, alphabet: &'static [Letter]) -> impl Strategy<Value = LacedCode> {
    prop::collection::vec(prop::sample::select(alphabet), 0..=max_len).prop_map(LacedCode::new)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn chain_and_perm() -> impl Strategy<Value = (FinAlgebra, Vec<usize>)> {
    code(5, &Letter::ALL).prop_flat_map(|c| {
        let a = compile(&c).algebra;
        let n = a.n();
        (Just(a), permutation(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compiled_chains_are_valid_laced_chains(c in code(6, &Letter::ALL)) {
        let a = compile(&c).algebra;
        prop_assert!(validate(&a).ok());
        prop_assert!(check_all(&a).ok());
        let p = monoidal_preorder(&a).unwrap();
        prop_assert!(check_laced_compatible(&a, &p).ok());
        prop_assert_eq!(recover_code(&a).unwrap(), c.clone());
        prop_assert_eq!(properties(&a).commutative, c.is_commutative());
    }

    #[test]
    fn code_strings_roundtrip(c in code(8, &Letter::ALL)) {
        prop_assert_eq!(c.to_string().parse::<LacedCode>().unwrap(), c);
    }

    #[test]
    fn relabeling_preserves_canonical_form((a, perm) in chain_and_perm()) {
        let b = a.relabel(&perm);
        prop_assert!(validate(&b).ok());
        prop_assert_eq!(canonical(&a), canonical(&b));
        prop_assert!(is_isomorphic(&a, &b).is_some());
        prop_assert_eq!(recover_code(&b).unwrap(), recover_code(&a).unwrap());
    }

    #[test]
    fn json_roundtrip((a, perm) in chain_and_perm()) {
        let b = a.relabel(&perm);
        prop_assert_eq!(FinAlgebra::from_json(&b.to_json()).unwrap(), b);
    }

    #[test]
    fn opposite_is_an_involution(c in code(6, &Letter::ALL)) {
        let a = compile(&c).algebra;
        let op = a.opposite();
        prop_assert!(validate(&op).ok());
        prop_assert_eq!(op.opposite(), a);
    }

    #[test]
    fn gamma_is_a_closure_operator(c in code(5, &Letter::ALL), center in 0usize..12) {
        let a = compile(&c).algebra;
        let g = gamma_closure(&a, center % a.n()).unwrap();
        prop_assert!(is_closure_operator(&a, &g));
    }

    #[test]
    fn tensor_then_skeleton(half in 0usize..3, fibers in prop::collection::vec(1usize..4, 7)) {
        let k = 2 * half + 1;
        let s = sugihara_from_involution(k).unwrap();
        let fibers = fibers[..k].to_vec();
        let a = tensor(&SkeletonDecomposition::new(s.clone(), fibers.clone())).unwrap();
        prop_assert!(validate(&a).ok());
        let f = properties(&a);
        prop_assert!(f.commutative && f.idempotent && f.totally_ordered);
        let sk = skeleton(&a).unwrap();
        prop_assert_eq!(sk.fibers.iter().map(Vec::len).collect::<Vec<_>>(), fibers);
        prop_assert!(is_isomorphic(&sk.algebra, &s).is_some());
    }

    #[test]
    fn catalan_sum_then_decompose(na in 1usize..5, nb in 1usize..5, i in 0usize..100, j in 0usize..100) {
        let xs = enumerate_catalan(na).unwrap();
        let ys = enumerate_catalan(nb).unwrap();
        let (x, y) = (&xs[i % xs.len()], &ys[j % ys.len()]);
        let c = catalan_sum(x, y).unwrap();
        prop_assert!(validate(&c).ok());
        prop_assert_eq!(c.n(), na + nb);
        let (a, b) = catalan_decompose(&c).unwrap();
        prop_assert_eq!(canonical(&a), canonical(x));
        prop_assert_eq!(canonical(&b), canonical(y));
    }

    #[test]
    fn fep_closures_preserve_partial_operations(k in 1usize..5, seed in subsequence((0..10).collect::<Vec<usize>>(), 0..=4)) {
        let a = abs_chain(k).unwrap();
        let b: BTreeSet<usize> = seed.into_iter().filter(|&x| x < a.n()).collect();
        let cl = fep_closure(&a, &b).unwrap();
        prop_assert!(validate(&cl.algebra).ok());
        prop_assert!(check_partial_preservation(&a, &cl).unwrap().ok());
        prop_assert!(b.iter().all(|x| cl.elements.contains(x)));
    }

    #[test]
    fn generated_sets_are_closed(c in code(5, &Letter::ALL), seed in subsequence((0..12).collect::<Vec<usize>>(), 1..=3)) {
        let a = compile(&c).algebra;
        let s: BTreeSet<usize> = seed.into_iter().filter(|&x| x < a.n()).collect();
        let g = generated_subalgebra(&a, &s).unwrap();
        prop_assert!(s.is_subset(&g));
        prop_assert_eq!(generated_subalgebra(&a, &g).unwrap(), g.clone());
        let elems: Vec<usize> = g.iter().copied().collect();
        prop_assert!(validate(&a.restrict(&elems).unwrap()).ok());
    }

    #[test]
    fn counting_methods_agree(n in 2usize..60) {
        let f = count_ic_formula(n).unwrap();
        prop_assert_eq!(&f, &count_ic_recurrence(n).unwrap());
        prop_assert_eq!(&f, &count_ic_closed(n).unwrap());
    }
}
