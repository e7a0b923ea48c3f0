macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run_example().unwrap();
            }
        }
    };
}

example!(exact_linear_algebra);
example!(fat_graphs);
example!(operads);
example!(tqft);
example!(hochschild);
example!(bv_algebras);
example!(cacti);
