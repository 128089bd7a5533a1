#pragma once

#include <string_view>
#include <vector>

// Reference table values, kept as printed.
namespace reftab {

struct FitRow {
  int N;
  std::string_view value;
  std::vector<std::string_view> coeffs;  // empty when the row has no fit
};

struct FitTable {
  int gamma;
  int n;
  std::vector<FitRow> rows;
};

struct DiagRow {
  int N;
  std::string_view i4, i4_approx, i4_error, i6, i6_approx, i6_error;
};

struct DiagTable {
  int gamma;
  std::vector<DiagRow> rows;
};

inline const std::vector<FitTable> sphere_tables = {
    {4, 2, {
        {2, "-1.06666666666667", {}},
        {3, "-0.73469387755102", {}},
        {4, "-0.552915766738661", {}},
        {5, "-0.437781621713968", {"0.076709", "-2.81362", "1.30721", "-0.506965"}},
        {6, "-0.361584090880502", {"-0.042858", "-1.37881", "-4.31243", "6.66705"}},
        {7, "-0.307439760694233", {"0.0121923", "-2.20457", "-0.238709", "0.0610148"}},
        {8, "-0.267158562552772", {"-0.00224307", "-1.94473", "-1.7833", "3.09245"}},
        {9, "-0.236094785664912", {"-0.00181613", "-1.9537", "-1.72096", "2.94899"}},
        {10, "-0.211435346122364", {"0.0000393273", "-1.99823", "-1.36657", "2.01384"}},
        {11, "-0.191399568920847", {"0.000150015", "-1.99312", "-1.41239", "2.15017"}},
        {12, "-0.17480728582518", {"-0.000241804", "-1.99036", "-1.43984", "2.24104"}},
        {13, "-0.160846001528985", {"-0.000138037", "-1.99379", "-1.40227", "2.10407"}},
        {14, "-0.148938895568825", {"-0.0000794746", "-1.99589", "-1.37703", "2.00357"}},
    }},
    {4, 3, {
        {4, "5.1605471562275", {}},
        {5, "6.11292630320115", {}},
        {6, "6.56602660174796", {}},
        {7, "6.78048920359037", {"5.49915", "27.6653", "-150.595", "138.066"}},
        {8, "6.87498575554362", {"5.58979", "26.0337", "-140.897", "119.031"}},
        {9, "6.9075123159669", {"5.74333", "22.8094", "-118.48", "67.4414"}},
        {10, "6.90772192712509", {"5.87714", "19.5982", "-92.9236", "0.00502236"}},
        {11, "6.89103601184945", {"5.92331", "18.3514", "-81.7487", "-33.2425"}},
        {12, "6.86574608931141", {"5.94863", "17.592", "-74.1805", "-58.301"}},
        {13, "6.83643498600859", {"5.96747", "16.9702", "-67.3594", "-83.1735"}},
        {14, "6.80567000027031", {"5.97905", "16.5534", "-62.3686", "-103.044"}},
    }},
    {4, 4, {
        {6, "40.3968590167648", {}},
        {7, "33.7964087943161", {}},
        {8, "26.9657510022336", {}},
        {9, "20.6758161117942", {"-49.3234", "709.717", "-95.7946", "-5595.45"}},
        {10, "15.1585480309705", {"-38.7061", "454.9", "1932.12", "-10946.6"}},
        {11, "10.414558865846", {"-33.7202", "320.28", "3138.71", "-14536.5"}},
        {12, "6.3618885422448", {"-31.5027", "253.756", "3801.74", "-16731.8"}},
        {13, "2.89953248501109", {"-30.4953", "220.513", "4166.41", "-18061.5"}},
        {14, "-0.0685490396317987", {"-30.1108", "206.671", "4332.12", "-18721.3"}},
    }},
    {6, 2, {
        {4, "1.77112299465241", {}},
        {5, "1.92727455514225", {}},
        {6, "1.97167595506035", {}},
        {7, "1.99917180579183", {"2.90767", "-14.9074", "84.3562", "-171.645"}},
        {8, "2.01319334170647", {"1.72398", "6.39891", "-42.2979", "76.9278"}},
        {9, "2.02020128573558", {"1.95459", "1.55616", "-8.62918", "-0.556218"}},
        {10, "2.02414460391682", {"2.08557", "-1.5874", "16.3883", "-66.5709"}},
        {11, "2.02625080279343", {"1.98854", "1.03254", "-7.09409", "3.29402"}},
        {12, "2.02719976576841", {"1.98147", "1.2446", "-9.2077", "10.2923"}},
    }},
    {6, 3, {
        {4, "29.2857260386672", {}},
        {5, "24.3553395496129", {}},
        {6, "19.3570221116088", {}},
        {7, "15.8157978386411", {"23.4057", "-367.801", "3052.6", "-5949.24"}},
        {8, "13.2137920826172", {"-1.67692", "83.6859", "368.754", "-681.887"}},
        {9, "11.2455089383337", {"-0.844904", "66.2135", "490.229", "-961.446"}},
        {10, "9.75173060605997", {"4.89476", "-71.5384", "1586.5", "-3854.23"}},
        {11, "8.58562698480205", {"0.124033", "57.2712", "431.99", "-419.314"}},
        {12, "7.65247243254821", {"-0.286731", "69.5941", "309.171", "-12.6574"}},
    }},
    {6, 4, {
        {4, "157.436163836164", {}},
        {5, "-33.5270610707337", {}},
        {6, "-196.111013214468", {}},
        {7, "-293.318966661244", {}},
        {8, "-343.529970425059", {}},
        {9, "-366.832915368496", {"129.267", "-11229.9", "71322.9", "-93943.9"}},
        {10, "-374.243763793112", {"161.032", "-11992.2", "77390", "-109954"}},
        {11, "-373.310338904328", {"-86.8351", "-5299.81", "17406.2", "68510.9"}},
        {12, "-368.298029500803", {"-183.485", "-2400.33", "-11492.1", "64194"}},
    }},
    {8, 2, {
        {3, "5.9504132231405", {}},
        {4, "5.35216744227873", {}},
        {5, "5.31949584221798", {}},
        {6, "5.03608123946663", {"-6.67707", "150.385", "-623.767", "858.777"}},
        {7, "4.90673278031246", {"11.9835", "-129.523", "757.114", "-1380.49"}},
    }},
    {8, 3, {
        {3, "103.537190082645", {}},
        {4, "57.4074000134889", {}},
        {5, "30.083006000112", {}},
        {6, "8.52435062302512", {"-202.192", "2030.17", "-5851.51", "7537.7"}},
        {7, "-1.73452473741117", {"248.055", "-4723.54", "27466.8", "-4649"}},
    }},
    {8, 4, {
        {3, "1073.4573622182", {}},
        {4, "-228.646302651363", {}},
        {5, "-1293.26989559543", {}},
        {6, "-1868.87943727765", {"1402.47", "-68534", "384230", "-544767"}},
        {7, "-1927.54995720038", {"13256.9", "246350", "1.26146e6", "-1.9673e6"}},
    }},
};

inline const std::vector<FitTable> disk_tables = {
    {4, 2, {
        {2, "0.8125", {}},
        {3, "1.126262", {}},
        {4, "1.44563743218807", {}},
        {5, "1.76891109591098", {"0.336437", "-0.0742714", "0.458953", "-0.221263"}},
        {6, "2.09454890418255", {"0.333419", "-0.00242266", "0.269645", "-0.0817588"}},
        {7, "2.42171814295119", {"0.332974", "0.0108746", "0.230301", "-0.0491322"}},
        {8, "2.74996856529295", {"0.33338", "-0.003688474", "0.277614", "-0.0922608"}},
        {9, "3.07901955876735", {"0.333458", "-0.00698637", "0.289203", "-0.103695"}},
        {10, "3.40868118671838", {"0.333396", "-0.00397741", "0.277889", "-0.0917455"}},
        {11, "3.73882025776555", {"0.333353", "-0.00169446", "0.268779", "-0.0815306"}},
        {12, "4.06934089384864", {"0.333341", "-0.000983289", "0.265786", "-0.0779911"}},
        {13, "4.4001722794716", {"0.333341", "-0.000982974", "0.265784", "-0.0779894"}},
        {14, "4.73126081887937", {"0.333342", "-0.00105077", "0.266097", "-0.0783948"}},
    }},
    {4, 3, {
        {2, "0.890625", {}},
        {3, "1.08333333333333", {}},
        {4, "1.29792043399638", {}},
        {5, "1.52318930281443", {"0.249835", "0.0492187", "0.53598", "-0.0745192"}},
        {6, "1.75432075208484", {"0.246695", "0.123999", "0.338947", "0.0706775"}},
        {7, "1.98916255005449", {"0.248062", "0.0831756", "0.459736", "-0.0294887"}},
        {8, "2.22660014721048", {"0.249434", "0.0339754", "0.619579", "-0.175195"}},
        {9, "2.46595156197257", {"0.249738", "0.021223", "0.664392", "-0.219408"}},
        {10, "2.70676308425724", {"0.249748", "0.0207354", "0.666226", "-0.221345"}},
        {11, "2.94871984780432", {"0.249774", "0.0193389", "0.671799", "-0.227593"}},
        {12, "3.19159601492947", {"0.249824", "0.0163325", "0.684451", "-0.242556"}},
        {13, "3.43522469549061", {"0.249871", "0.0132299", "0.69815", "-0.259556"}},
        {14, "3.67947926593368", {"0.249905", "0.0108374", "0.709186", "-0.273865"}},
    }},
    {4, 4, {
        {2, "1.21875", {}},
        {3, "1.25420875420875", {}},
        {4, "1.36950440777577", {}},
        {5, "1.51576558282311", {"0.188419", "0.468569", "-0.269131", "1.12729"}},
        {6, "1.67718058035561", {"0.189303", "0.447536", "-0.213712", "1.08645"}},
        {7, "1.84742557965232", {"0.194189", "0.301703", "0.217776", "0.728635"}},
        {8, "2.02343313425351", {"0.197002", "0.20078", "0.545661", "0.42975"}},
        {9, "2.20346793019457", {"0.197864", "0.164668", "0.672559", "0.30455"}},
        {10, "2.38645657506403", {"0.198269", "0.145249", "0.745579", "0.227431"}},
        {11, "2.57169539517539", {"0.198622", "0.126216", "0.821535", "0.142267"}},
        {12, "2.75870117826714", {"0.198925", "0.108069", "0.897903", "0.0519525"}},
        {13, "2.9471288020509", {"0.199158", "0.0926932", "0.965792", "-0.0322945"}},
        {14, "3.13672349360904", {"0.199328", "0.0804934", "1.02207", "-0.10526"}},
    }},
    {6, 2, {
        {3, "0.829151732377539", {}},
        {4, "1.13999055712937", {}},
        {5, "1.45889183119874", {}},
        {6, "1.78179400313294", {"0.330681", "-0.23698", "-0.0197034", "0.256393"}},
        {7, "2.10668148567864", {"0.326556", "-0.113869", "-0.383961", "0.55846"}},
        {8, "2.43308749295152", {"0.335184", "-0.423364", "0.621536", "-0.358107"}},
        {9, "2.76069703430536", {"0.335669", "-0.443708", "0.693027", "-0.428642"}},
        {10, "3.08920070504297", {"0.333408", "-0.335393", "0.285749", "0.00150004"}},
        {11, "3.41837572685644", {"0.33287", "-0.306358", "0.169876", "0.131419"}},
        {12, "3.74807370935471", {"0.333069", "-0.318295", "0.220112", "0.0720079"}},
    }},
    {6, 3, {
        {3, "0.63878932696137", {}},
        {4, "0.852317437834435", {}},
        {5, "1.07602482170551", {}},
        {6, "1.30481948267947", {"0.238952", "-0.17935", "-0.0015329", "0.306508"}},
        {7, "1.5366992098612", {"0.241542", "-0.256653", "0.227188", "0.116838"}},
        {8, "1.77130926929194", {"0.254997", "-0.739333", "1.79534", "-1.31262"}},
        {9, "2.00817460819162", {"0.253514", "-0.677215", "1.57705", "-1.09725"}},
        {10, "2.24678505124783", {"0.249869", "-0.502619", "0.920542", "-0.403889"}},
        {11, "2.48676496530133", {"0.249348", "-0.474543", "0.8085", "-0.278266"}},
        {12, "2.72785340315076", {"0.249797", "-0.501405", "0.921547", "-0.411958"}},
    }},
    {6, 4, {
        {3, "0.579848665870171", {}},
        {4, "0.732937257370685", {}},
        {5, "0.897778601877637", {}},
        {6, "1.06814688756782", {"0.178851", "0.00107475", "-0.227029", "0.519884"}},
        {7, "1.24220552729734", {"0.18911", "-0.305123", "0.678947", "-0.231411"}},
        {8, "1.41969193536163", {"0.204817", "-0.8686", "2.50959", "-1.90014"}},
        {9, "1.60002816650081", {"0.201673", "-0.736901", "2.04679", "-1.44354"}},
        {10, "1.78261079422029", {"0.198035", "-0.562593", "1.39137", "-0.751319"}},
        {11, "1.96700538479197", {"0.198245", "-0.573912", "1.43654", "-0.801964"}},
        {12, "2.15290808747152", {"0.199242", "-0.633669", "1.68802", "-1.09938"}},
    }},
    {8, 2, {
        {3, "0.691851631655437", {}},
        {4, "0.992192408359008", {}},
        {5, "1.30687171332381", {}},
        {6, "1.62802997072456", {"0.329038", "-0.289875", "-0.448497", "0.76066"}},
        {7, "1.95072743432764", {"0.302864", "0.491355", "-2.7599", "2.67751"}},
    }},
    {8, 3, {
        {3, "0.462978101466508", {}},
        {4, "0.661530611956197", {}},
        {5, "0.877122153006864", {}},
        {6, "1.10026340398747", {"0.231106", "-0.191724", "-0.630085", "0.97549"}},
        {7, "1.32616206590665", {"0.215749", "0.266649", "-1.98632", "2.10017"}},
    }},
    {8, 4, {
        {3, "0.359389450389747", {}},
        {4, "0.499919485631197", {}},
        {5, "0.656534473821437", {}},
        {6, "0.819712345574349", {"0.165419", "0.0211561", "-0.961295", "1.19094"}},
        {7, "0.985867782818619", {"0.16514", "0.0294668", "-0.985884", "1.21133"}},
    }},
};

inline const std::vector<DiagTable> diagram_tables = {
    {4, {
        {2, "-1.06666666666667", "-0.686993", "35.6", "0", "0.241677", ""},
        {3, "-0.73469387755102", "-0.534741", "27.2", "3.30612244897959", "1.54027", "53.4"},
        {4, "-0.552915766738661", "-0.42966", "22.3", "5.1605471562275", "2.52407", "51.1"},
        {5, "-0.437781621713968", "-0.356903", "18.5", "6.11292630320115", "3.21788", "47.4"},
        {6, "-0.361584090880502", "-0.304426", "15.8", "6.56602660174796", "3.71182", "43.5"},
        {7, "-0.307439760694233", "-0.26506", "13.8", "6.78048920359037", "4.07309", "39.9"},
        {8, "-0.267158562552772", "-0.234542", "12.2", "6.87498575554362", "4.34502", "36.8"},
        {9, "-0.236094785664912", "-0.210236", "11.0", "6.9075123159669", "4.5552", "34.1"},
        {10, "-0.211435346122364", "-0.190444", "9.9", "6.90772192712509", "4.72147", "31.6"},
        {11, "-0.191399568920847", "-0.174026", "9.1", "6.89103601184945", "4.85568", "29.5"},
        {12, "-0.17480728582518", "-0.160195", "8.4", "6.86574608931141", "4.96591", "27.7"},
        {13, "-0.160846001528985", "-0.148387", "7.7", "6.83643498600859", "5.05783", "26.0"},
        {14, "-0.148938895568825", "-0.138191", "7.2", "6.80567000027031", "5.1355", "24.5"},
    }},
    {6, {
        {3, "1.5", "2.12597868844099", "41.7", "32.4", "7.00428372252487", "78.4"},
        {4, "1.77112299465241", "2.11737368908595", "19.5", "29.2857260386672", "5.04095606861884", "82.8"},
        {5, "1.92727455514225", "2.10358894768327", "9.1", "24.3553395496129", "3.85885436737017", "84.2"},
        {6, "1.97167595506035", "2.09127008496943", "6.1", "19.3570221116088", "3.09958641182161", "84.0"},
        {7, "1.99917180579183", "2.08108076102509", "4.1", "15.8157978386411", "2.57924397229046", "83.7"},
        {8, "2.01319334170647", "2.07273170306951", "3.0", "13.2137920826172", "2.20346441160235", "83.3"},
        {9, "2.02020128573558", "2.06584181515105", "2.3", "11.2455089383337", "1.92065635218756", "82.9"},
        {10, "2.02414460391682", "2.06009120107809", "1.8", "9.75173060605997", "1.70073355331074", "82.6"},
        {11, "2.02625080279343", "2.0552339688013", "1.4", "8.58562698480205", "1.52513914797188", "82.2"},
        {12, "2.02719976576841", "2.05108476391051", "1.2", "7.65247243254821", "1.38187395446424", "81.9"},
    }},
    {8, {
        {3, "5.9504132231405", "7.336835008", "23.3", "103.537190082645", "-127.1369698", "222.8"},
        {4, "5.35216744227873", "6.1509483", "14.9", "57.4074000134889", "-71.80581066", "225.1"},
        {5, "5.31949584221798", "5.585392260", "5.0", "30.083006000112", "-54.66045440", "281.7"},
        {6, "5.03608123946663", "5.254867561", "4.3", "8.52435062302512", "-46.46113141", "645.0"},
        {7, "4.90673278031246", "5.038212233", "2.7", "-1.73452473741117", "-41.68739389", "2303.4"},
        {8, "", "4.885278337", "", "", "-38.57330645", ""},
        {9, "", "4.771577915", "", "", "-36.38521278", ""},
        {10, "", "4.683739174", "", "", "-34.76512324", ""},
        {11, "", "4.613844211", "", "", "-33.51802809", ""},
        {12, "", "4.556906725", "", "", "-32.52880274", ""},
        {13, "", "4.509630618", "", "", "-31.72517539", ""},
        {14, "", "4.469749993", "", "", "-31.05951906", ""},
        {15, "", "4.435655939", "", "", "-30.49918829", ""},
        {16, "", "4.406174568", "", "", "-30.02106637", ""},
        {17, "", "4.380429327", "", "", "-29.60832983", ""},
        {18, "", "4.357752484", "", "", "-29.24844597", ""},
        {19, "", "4.337626449", "", "", "-28.93188851", ""},
        {20, "", "4.319643825", "", "", "-28.65128805", ""},
    }},
    {2, {
        {2, "-0.666666666666667", "-0.6317574181", "5.236", "-0.8", "-0.752415111", "5.95"},
        {3, "-0.9", "-0.8700339821", "3.330", "-1.35", "-1.337880192", "0.90"},
        {4, "-1.06666666666667", "-1.042131679", "2.300", "-1.82857142857143", "-1.864218645", "1.95"},
        {5, "-1.19047619047619", "-1.170437198", "1.683", "-2.23214285714286", "-2.312761744", "3.61"},
        {6, "-1.28571428571429", "-1.26919496", "1.285", "-2.57142857142857", "-2.689601017", "4.60"},
        {7, "-1.36111111111111", "-1.347327155", "1.013", "-2.85833333333333", "-3.00618709", "5.17"},
        {8, "-1.42222222222222", "-1.410579495", "0.819", "-3.1030303030303", "-3.27362061", "5.50"},
        {9, "-1.47272727272727", "-1.462780494", "0.675", "-3.31363636363636", "-3.501250962", "5.66"},
        {10, "-1.51515151515152", "-1.50656529", "0.567", "-3.4965034965035", "-3.69658924", "5.72"},
        {11, "-1.55128205128205", "-1.543801073", "0.482", "-3.65659340659341", "-3.865574853", "5.72"},
        {12, "-1.58241758241758", "-1.57584505", "0.415", "-3.7978021978022", "-4.012891553", "5.66"},
        {13, "-1.60952380952381", "-1.603706117", "0.361", "-3.92321428571429", "-4.142245077", "5.58"},
        {14, "-1.63333333333333", "-1.628149088", "0.317", "-4.03529411764706", "-4.256585403", "5.48"},
        {15, "-1.65441176470588", "-1.649763932", "0.281", "-4.13602941176471", "-4.358278405", "5.37"},
        {16, "-1.67320261437909", "-1.669012791", "0.250", "-4.22703818369453", "-4.449236580", "5.26"},
        {17, "-1.69005847953216", "-1.686262682", "0.225", "-4.30964912280702", "-4.531018304", "5.14"},
        {18, "-1.70526315789474", "-1.701808689", "0.203", "-4.38496240601504", "-4.604903343", "5.02"},
        {19, "-1.71904761904762", "-1.715890707", "0.184", "-4.4538961038961", "-4.671950573", "4.90"},
        {20, "-1.73160173160173", "-1.72870573", "0.167", "-4.51722190852626", "-4.733042400", "4.78"},
        {21, "-1.74308300395257", "-1.740417020", "0.153", "-4.57559288537549", "-4.788919165", "4.66"},
        {22, "-1.7536231884058", "-1.751160988", "0.140", "-4.6295652173913", "-4.840206004", "4.55"},
        {23, "-1.76333333333333", "-1.761052508", "0.129", "-4.67961538461538", "-4.88743397", "4.44"},
        {24, "-1.77230769230769", "-1.770188989", "0.120", "-4.72615384615385", "-4.931056780", "4.34"},
        {25, "-1.78062678062678", "-1.778653568", "0.111", "-4.76953601953602", "-4.971464120", "4.23"},
        {26, "-1.78835978835979", "-1.786517625", "0.103", "-4.81007115489874", "-5.008992411", "4.14"},
        {27, "-1.79556650246305", "-1.793842793", "0.096", "-4.84802955665025", "-5.043933457", "4.04"},
        {28, "-1.80229885057471", "-1.800682557", "0.090", "-4.88364849833148", "-5.076541501", "3.95"},
        {29, "-1.80860215053763", "-1.807083561", "0.084", "-4.91713709677419", "-5.107039000", "3.86"},
        {30, "-1.81451612903226", "-1.813086665", "0.079", "-4.94868035190616", "-5.135621381", "3.78"},
        {31, "-1.82007575757576", "-1.818727815", "0.074", "-4.97844251336898", "-5.16246097", "3.70"},
        {32, "-1.825311942959", "-1.824038756", "0.070", "-5.00656990068755", "-5.187710286", "3.62"},
    }},
};

}  // namespace reftab
