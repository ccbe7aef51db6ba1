#include "twistcalc/twist.hpp"

#include <chrono>

#include "twistcalc/cutting.hpp"

namespace tc {

namespace {

// Handedness fixture: with counterclockwise vertex orders, a crossing of
// positive sign inserts the forward rotation of the twisting curve. The
// catalog relations (notably (ab)^6 = boundary on the one-holed torus) pin
// this bit; flipping it would compute left-handed twists instead.
constexpr int kRightHandedInsertion = +1;

}  // namespace

Automorphism twist_automorphism(const CurveWord& c, int sign) {
  if (sign != 1 && sign != -1) throw Error("twist sign must be +1 or -1");
  if (!c.embedded_certified)
    throw Error("twist curve '" + c.name + "' is not certified embedded");
  const SurfacePtr& surface = c.surface;
  if (surface->closed())
    throw Error("twists are computed on the bordered model; uncap the "
                "surface and verify the bordered lift");

  auto build = [&](int s) {
    std::vector<FreeWord> images;
    for (int g = 1; g <= surface->rank(); ++g) {
      GeneratorCrossings cr = generator_crossings(g, c);
      FreeWord img;
      for (const TwistCrossing& x : cr.before) {
        FreeWord rot = c.word.rotated(static_cast<std::size_t>(x.rotation));
        img.append(x.sign * s * kRightHandedInsertion > 0 ? rot : rot.inverse());
      }
      for (const TwistCrossing& x : cr.mid) {
        FreeWord rot = c.word.rotated(static_cast<std::size_t>(x.rotation));
        img.append(x.sign * s * kRightHandedInsertion > 0 ? rot : rot.inverse());
      }
      img.append(g);
      for (const TwistCrossing& x : cr.after) {
        FreeWord rot = c.word.rotated(static_cast<std::size_t>(x.rotation));
        img.append(x.sign * s * kRightHandedInsertion > 0 ? rot : rot.inverse());
      }
      images.push_back(std::move(img));
    }
    return images;
  };

  return Automorphism(surface, build(sign), build(-sign));
}

Automorphism evaluate_twist_word(SurfacePtr surface, const ExplicitTwistWord& w) {
  Automorphism acc = Automorphism::identity(surface);
  for (const SignedCurve& letter : w) {
    if (!letter.curve.surface->same_as(*surface))
      throw Error("twist letter '" + letter.curve.name +
                  "' lives on a different surface");
    acc = compose(acc, twist_automorphism(letter.curve, letter.sign));
  }
  return acc;
}

Certificate verify_relation(SurfacePtr surface, const ExplicitTwistWord& lhs,
                            const ExplicitTwistWord& rhs) {
  auto t0 = std::chrono::steady_clock::now();
  Automorphism fl = evaluate_twist_word(surface, lhs);
  Automorphism fr = evaluate_twist_word(surface, rhs);
  Certificate cert;
  cert.pass = true;
  for (int g = 1; g <= surface->rank(); ++g) {
    GeneratorComparison row;
    row.generator = surface->ribbon().edge_labels[static_cast<std::size_t>(g - 1)];
    row.lhs_image = format_word(fl.image(g), *surface);
    row.rhs_image = format_word(fr.image(g), *surface);
    row.equal = fl.image(g) == fr.image(g);
    cert.pass = cert.pass && row.equal;
    cert.rows.push_back(std::move(row));
  }
  cert.millis = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return cert;
}

Certificate alexander_check(SurfacePtr surface, const ExplicitTwistWord& lhs,
                            const ExplicitTwistWord& rhs,
                            const std::vector<CurveWord>& system) {
  if (!is_filling(surface, system))
    throw Error("alexander check requires a filling curve system");
  auto t0 = std::chrono::steady_clock::now();
  Automorphism fl = evaluate_twist_word(surface, lhs);
  Automorphism fr = evaluate_twist_word(surface, rhs);
  Certificate cert;
  cert.pass = true;
  for (const CurveWord& c : system) {
    GeneratorComparison row;
    row.generator = c.name;
    CurveWord il = fl.apply(c);
    CurveWord ir = fr.apply(c);
    row.lhs_image = format_word(il.word, *surface);
    row.rhs_image = format_word(ir.word, *surface);
    row.equal = il.word.conjugate_to(ir.word);
    cert.pass = cert.pass && row.equal;
    cert.rows.push_back(std::move(row));
  }
  cert.millis = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return cert;
}

}  // namespace tc
