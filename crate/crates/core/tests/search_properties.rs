use flagbetti::graphs::encode_graph6;
use flagbetti::search::{enumerate_graphs, maximize, stream_graph6, ClassFilter, SearchMetric, SearchOptions, Source};
use flagbetti::Limits;

fn report_json(threads: usize, metric: SearchMetric, class: ClassFilter, n: usize) -> String {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    let opts = SearchOptions { checkpoint_every: 97, ..SearchOptions::default() };
    pool.install(|| serde_json::to_string(&maximize(metric, class, Source::Generated(n), &opts).unwrap()).unwrap())
}

#[test]
fn reports_are_byte_identical_across_worker_counts() {
    for (metric, class, n) in [
        (SearchMetric::B, ClassFilter::All, 7),
        (SearchMetric::B, ClassFilter::TriangleFree, 8),
        (SearchMetric::Beta, ClassFilter::Connected, 6),
        (SearchMetric::BNeighbourhood, ClassFilter::Bipartite, 7),
    ] {
        let one = report_json(1, metric, class, n);
        assert_eq!(one, report_json(3, metric, class, n), "{metric} {class} {n}");
        assert_eq!(one, report_json(8, metric, class, n), "{metric} {class} {n}");
    }
}

#[test]
fn generator_and_stream_agree() {
    for n in 1..=7 {
        let gs = enumerate_graphs(n, ClassFilter::All, &Limits::default()).unwrap();
        let text: String = gs.iter().map(|g| encode_graph6(g).unwrap() + "\n").collect();
        let opts = SearchOptions::default();
        let streamed =
            maximize(SearchMetric::B, ClassFilter::All, Source::Stream(Box::new(stream_graph6(text.as_bytes()))), &opts)
                .unwrap();
        let generated = maximize(SearchMetric::B, ClassFilter::All, Source::Generated(n), &opts).unwrap();
        assert_eq!(serde_json::to_value(&streamed).unwrap(), serde_json::to_value(&generated).unwrap(), "n={n}");
    }
}
