#pragma once

#include <string_view>

namespace vogel::mckay {

/// Embedded copy of data/character_tables.txt (format: docs/character_tables.md).
inline constexpr std::string_view kCharacterTables = R"tables(version 1
checksum fnv1a64 affbc1c695b848dd
group 2T order 24 field 3
class 1 1 1;0;0;0
class -1 1 -1;0;0;0
class i 6 0;1;0;0
class g 4 1/2;1/2;1/2;1/2
class g^-1 4 1/2;-1/2;-1/2;-1/2
class -g 4 -1/2;-1/2;-1/2;-1/2
class -g^-1 4 -1/2;1/2;1/2;1/2
irrep 1 1 1 1 1 1 1 1
irrep 1w 1 1 1 z z^2 z z^2
irrep 1w2 1 1 1 z^2 z z^2 z
irrep 2 2 -2 0 1 1 -1 -1
irrep 2w 2 -2 0 z z^2 -z -z^2
irrep 2w2 2 -2 0 z^2 z -z^2 -z
irrep 3 3 3 -1 0 0 0 0
end
group 2O order 48 field 8
class 1 1 1;0;0;0
class -1 1 -1;0;0;0
class i 6 0;1;0;0
class g 8 1/2;1/2;1/2;1/2
class -g 8 -1/2;-1/2;-1/2;-1/2
class h 6 1/2*z-1/2*z^3;1/2*z-1/2*z^3;0;0
class -h 6 -1/2*z+1/2*z^3;-1/2*z+1/2*z^3;0;0
class (i+j)/r2 12 0;1/2*z-1/2*z^3;1/2*z-1/2*z^3;0
irrep 1 1 1 1 1 1 1 1 1
irrep 1e 1 1 1 1 1 -1 -1 -1
irrep 2 2 -2 0 1 -1 z-z^3 -z+z^3 0
irrep 2e 2 -2 0 1 -1 -z+z^3 z-z^3 0
irrep 2s 2 2 2 -1 -1 0 0 0
irrep 3 3 3 -1 0 0 1 1 -1
irrep 3e 3 3 -1 0 0 -1 -1 1
irrep 4 4 -4 0 -1 1 0 0 0
end
group 2I order 120 field 5
class 1 1 1;0;0;0
class -1 1 -1;0;0;0
class i 30 0;1;0;0
class g 20 1/2;1/2;1/2;1/2
class -g 20 -1/2;-1/2;-1/2;-1/2
class w 12 1/2+1/2*z+1/2*z^4;0;1/2*z+1/2*z^4;1/2
class -w^2 12 -1/2*z-1/2*z^4;0;-1/2;-1/2-1/2*z-1/2*z^4
class w^2 12 1/2*z+1/2*z^4;0;1/2;1/2+1/2*z+1/2*z^4
class -w 12 -1/2-1/2*z-1/2*z^4;0;-1/2*z-1/2*z^4;-1/2
irrep 1 1 1 1 1 1 1 1 1 1
irrep 2 2 -2 0 1 -1 1+z+z^4 -z-z^4 z+z^4 -1-z-z^4
irrep 2' 2 -2 0 1 -1 -z-z^4 1+z+z^4 -1-z-z^4 z+z^4
irrep 3 3 3 -1 0 0 1+z+z^4 -z-z^4 -z-z^4 1+z+z^4
irrep 3' 3 3 -1 0 0 -z-z^4 1+z+z^4 1+z+z^4 -z-z^4
irrep 4 4 -4 0 -1 1 1 1 -1 -1
irrep 4' 4 4 0 1 1 -1 -1 -1 -1
irrep 5 5 5 1 -1 -1 0 0 0 0
irrep 6 6 -6 0 0 0 -1 -1 1 1
end
)tables";

}  // namespace vogel::mckay
