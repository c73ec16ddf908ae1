#ifndef CUSP_HYP2F1_HPP
#define CUSP_HYP2F1_HPP

namespace cusp::specfun {

// Gauss hypergeometric F(a,b;c;t) for t in [0,1).  Route selection:
// power series for t <= 0.5, Euler integral for t > 0.5 when c > b > 0,
// otherwise the t <-> 1-t reflection for integer first parameter.
double hyp2f1(double a, double b, double c, double t);

// F(n,1;c;t) through the reflection identity
//   F(a,1;c;t) = Gamma(c)Gamma(a+1-c)/Gamma(a) (1-t)^{c-a-1} t^{1-c}
//              + (c-1)/(c-a-1) F(a,1;2+a-c;1-t),
// valid for t in (0,1) when c-n-1 is not a nonpositive integer.
double hyp2f1_reflect(int n, double c, double t);

} // namespace cusp::specfun

#endif
