#include "fixloci/catalog.hpp"

namespace fixloci {

// One row per group action; fields label|name|order|config|invariant_lattice|flags.
// Flags are ;-separated tokens: admissible, kummer, fujiki, note=..., torsion=factors:decorations.
std::string_view catalog_text() {
    static const char* text =
        "# k3 actions: label|name|order|config|invariant_lattice|flags\n"
        "1|C_2|2|8A_1|U^3+E8(-2)|admissible\n"
        "2|C_3|3|6A_2|U+U(3)+A2(-1)^2|admissible\n"
        "3|C_2x2|4|12A_1|U+U(2)^2+D4(-2)|admissible\n"
        "4|C_4|4|4A_3+2A_1|U+U(4)^2+(-2)^2|admissible\n"
        "5|C_5|5|4A_4|U+U(5)^2|admissible\n"
        "6|D_6|6|3A_2+8A_1|U(3)+A2(2)+A2(-1)^2|\n"
        "7|C_6|6|2A_5+2A_2+2A_1|U+U(6)^2|admissible\n"
        "8|C_7|7|3A_6|U(7)+[2,1;1,4]|\n"
        "9|C_2x2x2|8|14A_1|U(2)^3+(-4)^2|\n"
        "10|D_8|8|2A_3+9A_1|U+(4)^2+(-4)^3|admissible\n"
        "11|C_2xC_4|8|4A_3+4A_1|U(2)+(4)^2+(-4)^2|\n"
        "12|Q_8|8|2D_4+3A_3|[6,2,2;2,6,-2;2,-2,6]+(-2)^2|\n"
        "13|Q_8|8|4D_4+A_1|(4)^3+(-4)^2|\n"
        "14|C_8|8|2A_7+A_3+A_1|U(8)+(2)+(4)|\n"
        "15|C_3x3|9|8A_2|U(3)^2+[2,3;3,0]|\n"
        "16|D_10|10|2A_4+8A_1|U+U(5)^2|admissible\n"
        "17|A_4|12|6A_2+4A_1|U+A2(2)+A2(-4)|admissible\n"
        "18|D_12|12|A_5+A_2+9A_1|U+U(6)^2|admissible\n"
        "19|C_2xC_6|12|3A_5+3A_1|U(3)+A2(4)|\n"
        "20|Q_12|12|2D_5+2A_3+A_2|U(3)+A2(4)|\n"
        "21|C_2x2x2x2|16|15A_1|U(2)^3+(-8)|\n"
        "22|C_2xD_8|16|2A_3+10A_1|U(2)+(4)^2+(-4)^2|\n"
        "23|Gamma2c1|16|4A_3+5A_1|U(2)+(4)+(-4)+(8)|\n"
        "24|Q_8*C_4|16|2D_4+A_3+6A_1|(4)^3+(-4)^2|\n"
        "25|C_4x4|16|6A_3|[4,0,2,0;0,4,2,0;2,2,4,4;0,0,4,0]|\n"
        "26|SD_16|16|A_7+D_4+A_3+4A_1|U(8)+(2)+(4)|\n"
        "27|C_2xQ_8|16|4D_4+2A_1|[4,0,2,0;0,4,2,0;2,2,4,4;0,0,4,0]|\n"
        "28|Gamma2d|16|2A_7+A_3+2A_1|(4)+(8)^2|\n"
        "29|Q_16|16|2D_6+D_4+A_3|(4)+(8)^2|\n"
        "30|A_3,3|18|4A_2+8A_1|U(3)^2+[2,3;3,0]|\n"
        "31|C_3xD_6|18|2A_5+3A_2+2A_1|U(3)+A2(6)|\n"
        "32|Hol(C_5)|20|A_4+4A_3+2A_1|U(5)+[4,2;2,6]|\n"
        "33|C_7:C_3|21|A_6+6A_2|U(7)+[2,1;1,4]|\n"
        "34|S_4|24|2A_3+3A_2+5A_1|U+A2(4)+(-12)|admissible;note=admissible-groups table prints 2A_3+3A_2+2A_1\n"
        "35|C_2:A_4|24|2A_5+2A_2+4A_1|U(2)+(12)^2|\n"
        "36|C_3:D_8|24|A_5+D_5+A_3+5A_1|U(3)+A2(4)|\n"
        "37|T_24|24|E_6+A_5+D_4+2A_2|[4,0,0;0,8,4;0,4,8]|\n"
        "38|T_24|24|2E_6+A_3+2A_2|[2,0,0;0,16,8;0,8,16]|\n"
        "39|2^4C_2|32|3A_3+8A_1|U(2)+(4)+(-4)+(8)|\n"
        "40|Q_8*Q_8|32|2D_4+9A_1|(4)^3+(-4)^2|\n"
        "41|Gamma7a1|32|5A_3+3A_1|(4)^3+(-8)|\n"
        "42|Gamma4c2|32|2D_4+2A_3+4A_1|[4,0,2,0;0,4,2,0;2,2,4,4;0,0,4,0]|\n"
        "43|Gamma7a2|32|2A_7+5A_1|(4)+(8)^2|\n"
        "44|Gamma3e|32|A_7+D_4+2A_3+2A_1|(4)+(8)^2|\n"
        "45|Gamma6a2|32|2D_6+D_4+3A_1|(4)+(8)^2|\n"
        "46|3^2C_4|36|4A_3+2A_2+2A_1|A2+(6)+(-18)|\n"
        "47|C_3xA_4|36|A_5+6A_2+A_1|U(3)+A2(4)|\n"
        "48|S_3,3|36|2A_5+A_2+6A_1|U(3)+A2(6)|\n"
        "49|2^4C_3|48|6A_2+5A_1|U(2)+A2(2)+(-8)|\n"
        "50|4^2C_3|48|2A_3+6A_2|[4,0,2,0;0,4,2,0;2,2,4,4;0,0,4,0]|\n"
        "51|C_2xS_4|48|A_5+2A_3+A_2+5A_1|U(2)+(12)^2|\n"
        "52|2^2(C_2xC_6)|48|3A_5+4A_1|[8,4,4;4,8,2;4,2,8]|\n"
        "53|2^2Q_12|48|2D_5+2A_3+A_2+A_1|[8,4,4;4,8,2;4,2,8]|\n"
        "54|T_48|48|A_7+E_6+A_2+4A_1|[2,0,0;0,16,8;0,8,16]|\n"
        "55|A_5|60|2A_4+3A_2+4A_1|U+A2(10)|admissible\n"
        "56|Gamma25a1|64|D_4+3A_3+5A_1|(4)^3+(-8)|\n"
        "57|Gamma13a1|64|3D_4+6A_1|[4,0,2,0;0,4,2,0;2,2,4,4;0,0,4,0]|\n"
        "58|Gamma22a1|64|A_7+3A_3+3A_1|(4)+(8)^2|\n"
        "59|Gamma23a2|64|D_4+5A_3|(4)+(8)^2|\n"
        "60|Gamma26a2|64|2D_6+A_3+4A_1|(4)+(8)^2|\n"
        "61|A_4,3|72|D_5+A_3+3A_2+4A_1|U(3)+A2(4)|\n"
        "62|N_72|72|2A_5+2A_3+3A_1|[6,3,3;3,6,3;3,3,12]|\n"
        "63|M_9|72|2D_4+3A_3+A_2|[2,0,0;0,12,6;0,6,12]|\n"
        "64|2^4C_5|80|4A_4+3A_1|[4,0,2;0,4,2;2,2,12]|\n"
        "65|2^4D_6|96|3A_3+3A_2+3A_1|A2(2)+(4)+(-8)|\n"
        "66|2^4C_6|96|2A_5+A_3+2A_2+2A_1|(4)+(8)+(12)|\n"
        "67|4^2D_6|96|A_7+D_4+3A_2+2A_1|(4)+(8)^2|\n"
        "68|2^3D_12|96|A_5+D_5+2A_3+3A_1|[8,4,4;4,8,2;4,2,8]|\n"
        "69|(Q_8*Q_8):C_3|96|2E_6+2A_2+3A_1|[4,0,0;0,8,4;0,4,8]|\n"
        "70|S_5|120|A_5+A_4+2A_3+A_2+2A_1|[4,1,0;1,4,0;0,0,20] or [4,2,2;2,6,1;2,1,16]|\n"
        "71|F_128|128|D_6+D_4+2A_3+3A_1|(4)+(8)^2|\n"
        "72|A_4xA_4|144|2A_5+4A_2+A_1|[8,4,4;4,8,2;4,2,8]|\n"
        "73|2^4D_10|160|2A_4+3A_3+2A_1|[4,0,2;0,4,2;2,2,12]|\n"
        "74|L_2(7)|168|A_6+2A_3+3A_2+A_1|[2,1,0;1,4,0;0,0,28] or [4,2,2;2,8,1;2,1,8]|\n"
        "75|4^2A_4|192|D_4+6A_2+2A_1|[4,0,2,0;0,4,2,0;2,2,4,4;0,0,4,0]|\n"
        "76|H_192|192|A_5+D_4+2A_3+A_2+2A_1|(4)+(8)+(12)|\n"
        "77|T_192|192|E_6+3A_3+A_2+2A_1|[4,0,0;0,8,4;0,4,8]|\n"
        "78|A_4,4|288|2D_5+A_3+2A_2+2A_1|[8,4,4;4,8,2;4,2,8]|\n"
        "79|A_6|360|2A_4+2A_3+2A_2+A_1|[2,1,0;1,8,0;0,0,12] or [6,0,3;0,6,3;3,3,8]|\n"
        "80|F_384|384|D_6+2A_3+3A_2+A_1|(4)+(8)^2|\n"
        "81|M_20|960|2A_4+D_4+3A_2+A_1|[4,0,2;0,4,2;2,2,12]|\n"
        "# abelian actions: label|name|order|config|invariant_lattice|flags\n"
        "1|C_2|2|16A_1|-|kummer;torsion=2,2,2,2:0000 0001 0010 0011 0100 0101 0110 0111 1000 1001 1010 1011 1100 1101 1110 1111\n"
        "2|C_3|3|9A_2|-|kummer;torsion=3,3:00 01 02 10 11 12 20 21 22\n"
        "3|C_4|4|4A_3+6A_1|U+A1(-1)^2|kummer;torsion=2,2:00 01 10 11 01 01 10 10 11 11\n"
        "4|C_6|6|A_5+4A_2+5A_1|U+A2(-1)|kummer\n"
        "5|Q_8|8|4D_4+3A_1|A1(-1)^3|fujiki\n"
        "6|Q_8|8|2D_4+3A_3+2A_1|A1(-1)^3|fujiki\n"
        "7|BD_12|12|D_5+3A_3+2A_2+A_1|A1(-1)+A2(-1)|fujiki;note=source table prints 3A_4, inconsistent with inertia divisibility, stored as 3A_3\n"
        "8|T_24|24|E_6+D_4+4A_2+A_1|A3(-1)|fujiki\n"
        ;
    return text;
}

} // namespace fixloci
