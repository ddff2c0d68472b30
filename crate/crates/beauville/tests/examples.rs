macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!($file);
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(perm_groups, "../examples/perm_groups.rs");
example!(matrix_groups, "../examples/matrix_groups.rs");
example!(constructions, "../examples/constructions.rs");
example!(check_unmixed, "../examples/check_unmixed.rs");
example!(check_mixed, "../examples/check_mixed.rs");
example!(gallery, "../examples/gallery.rs");
example!(reality, "../examples/reality.rs");
example!(search, "../examples/search.rs");
example!(verify, "../examples/verify.rs");
example!(cli, "../examples/cli.rs");
