/// Calls `visit` once for every nonempty clique of the graph on `0..n`, in
/// lexicographic order of the sorted vertex lists.
pub(crate) fn for_each_clique(n: usize, adjacent: &[Vec<bool>], mut visit: impl FnMut(&[usize])) {
    let mut clique = Vec::new();
    let candidates: Vec<usize> = (0..n).collect();
    extend(&mut clique, &candidates, adjacent, &mut visit);
}

fn extend(clique: &mut Vec<usize>, candidates: &[usize], adjacent: &[Vec<bool>], visit: &mut impl FnMut(&[usize])) {
    for (i, &v) in candidates.iter().enumerate() {
        clique.push(v);
        visit(clique);
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| adjacent[v][w])
            .collect();
        if !next.is_empty() {
            extend(clique, &next, adjacent, visit);
        }
        clique.pop();
    }
}
