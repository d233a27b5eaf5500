//! Compare both sides of the two generating-function identities as
//! truncated series in z.

use qbinomial::identities::sides::{series_side, Route};

fn main() {
    let (m, order) = (2, 6);
    for route in [Route::New3, Route::New4] {
        let (lhs, rhs) = series_side(route, m, order);
        println!("{route:?}, m = {m}, through z^{order}: equal = {}", lhs == rhs);
        println!("{lhs}");
    }
}
