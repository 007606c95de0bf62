// Words in virtual braid groups: parsing, reduction, permutations, the
// Garside twist and two-strand shortest forms.

use vbraid::braid::{
    defining_relations, enumerate_words, forgetful, free_reduce, garside_element, garside_twist,
    parse_word, sigma_count, vb2_shortest_form,
};

pub fn run_example() -> vbraid::Result<()> {
    let w = parse_word("s1 z2 S2 s2 s1 z1", 3)?;
    println!("word            {w}");
    println!("freely reduced  {}", free_reduce(&w));
    println!("permutation     {}", forgetful(&w));
    println!("sigma count     {}", sigma_count(&w));
    println!("garside twist   {}", garside_twist(&w));
    println!("garside element {}", garside_element(3));

    let shortest = vb2_shortest_form(&parse_word("z1 s1 z1 z1 z1 s1", 2)?)?;
    println!(
        "shortest form   {} (k = {})",
        shortest.to_word(),
        shortest.k
    );

    let words = enumerate_words(2, 3, true).count();
    println!("positive words on 2 strands up to length 3: {words}");
    for r in defining_relations(3, false).iter().take(4) {
        println!("{:8} {} = {}", r.family, r.lhs, r.rhs);
    }
    Ok(())
}

fn main() {
    run_example().expect("virtual braids example");
}
