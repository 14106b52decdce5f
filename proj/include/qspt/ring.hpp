#pragma once

#include <concepts>

namespace qspt {

/* Capability set a series coefficient ring must provide. A default-constructed
 * value must be the additive zero. Invertibility may be partial: a ring only
 * has to answer honestly, and inverse() may throw on non-invertible input. */
template <typename R>
concept CoefficientRing =
	std::default_initializable<R> && std::copyable<R> &&
	requires(R a, const R b, long n) {
		R(n);
		{ R::zero() } -> std::same_as<R>;
		{ R::one() } -> std::same_as<R>;
		{ a += b } -> std::same_as<R&>;
		{ a -= b } -> std::same_as<R&>;
		{ a *= b } -> std::same_as<R&>;
		{ -b } -> std::convertible_to<R>;
		{ b * b } -> std::convertible_to<R>;
		{ b.is_zero() } -> std::convertible_to<bool>;
		{ b.is_one() } -> std::convertible_to<bool>;
		{ b.invertible() } -> std::convertible_to<bool>;
		{ b.inverse() } -> std::convertible_to<R>;
		{ b == b } -> std::convertible_to<bool>;
	};

}
