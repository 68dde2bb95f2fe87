#include "fedlogic/kernel.hpp"

namespace fedlogic {

const std::string& lemma21_text() {
  static const std::string text = R"(-- triv(a) :> (b :> a)
1. a :> O ; A8
2. triv(a) :> O ; sub 1 a := triv(a)
3. a :> O ; A8
4. b :> O ; sub 3 a := b
5. (a :> b) :> triv(a :> b) ; A11
6. (a :> O) :> triv(a :> O) ; sub 5 b := O
7. (b :> O) :> triv(b :> O) ; sub 6 a := b
8. triv(b :> O) ; exch 4 7
9. (a :> b) :> ((b :> c) :> (a :> c)) ; lemma transitivity
10. (triv(a) :> b) :> ((b :> c) :> (triv(a) :> c)) ; sub 9 a := triv(a)
11. (triv(a) :> O) :> (triv(c) :> (triv(a) :> c)) ; sub 10 b := O
12. (triv(a) :> O) :> (triv(b :> O) :> (triv(a) :> (b :> O))) ; sub 11 c := b :> O
13. triv(b :> O) :> (triv(a) :> (b :> O)) ; exch 2 12
14. triv(a) :> (b :> O) ; exch 8 13
15. a :> a ; A7
16. triv(a) :> triv(a) ; sub 15 a := triv(a)
17. ((d :> (a :> b)) & (d :> (b :> c))) :> (d :> (a :> c)) ; A2
-- steps 18-21: the cited substitutions, applied in an order that reaches step 21
18. ((d :> (a :> O)) & (d :> triv(c))) :> (d :> (a :> c)) ; sub 17 b := O
19. ((d :> (b :> O)) & (d :> triv(c))) :> (d :> (b :> c)) ; sub 18 a := b
20. ((d :> (b :> O)) & (d :> triv(a))) :> (d :> (b :> a)) ; sub 19 c := a
21. ((triv(a) :> (b :> O)) & (triv(a) :> triv(a))) :> (triv(a) :> (b :> a)) ; sub 20 d := triv(a)
22. (triv(a) :> (b :> O)) & (triv(a) :> triv(a)) ; comb 14 16
23. triv(a) :> (b :> a) ; exch 22 21
)";
  return text;
}

const LemmaRegistry& standard_lemmas() {
  static const LemmaRegistry reg = [] {
    LemmaRegistry r;
    ProofScript t = generate_transitivity();
    Object tt = check_script(t, r);
    r.add({"transitivity", tt, t});
    ProofScript l = parse_script(lemma21_text());
    Object lt = check_script(l, r);
    r.add({"lemma-2.1", lt, l});
    return r;
  }();
  return reg;
}

}  // namespace fedlogic
