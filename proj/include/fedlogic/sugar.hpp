#pragma once

#include "fedlogic/object.hpp"

namespace fedlogic::sugar {

Object var(unsigned i);  // canonical variable object
inline Object O() { return Object::empty(); }
inline Object bot() { return Object::absurd(); }

Object not_(const Object& a);                  // a :> _|_
Object triv(const Object& a);                  // O :> a
Object eq(const Object& a, const Object& b);   // (a :> b) & (b :> a)
Object neq(const Object& a, const Object& b);  // not(a = b)
Object or_(const Object& a, const Object& b, Mode mode = Mode::extended);
Object inter(const Object& a, const Object& b, Mode mode = Mode::extended);

// a <: b, i.e. b :> a at level 0; at level n >= 1 it is b = (a &n b).
Object sub(const Object& a, const Object& b, unsigned level = 0);

// Level 0 binds the witness over the individuals (All w. ...); level n uses
// the free-witness form with the default witness.
Object sing(const Object& a, unsigned level = 0, Mode mode = Mode::extended);
Variable default_witness(const Object& subject);
// Literal definitional forms with an explicit free witness.
Object sing_free(const Object& a, const Variable& witness, Mode mode = Mode::extended);
Object sing_n_free(unsigned level, const Object& a, const Variable& witness,
                   Mode mode = Mode::extended);

Object in(const Object& a, const Object& b, unsigned level = 0, Mode mode = Mode::extended);

Object universe(unsigned level = 0);  // V, Vn
Object all(const Variable& x, const Object& phi);
Object ex(const Variable& x, const Object& phi);

}  // namespace fedlogic::sugar
