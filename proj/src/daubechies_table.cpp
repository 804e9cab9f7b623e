// Daubechies scaling filter coefficients (dec_lo), db1..db26.
// Generated by tools/gen_daubechies.py; do not edit by hand.

#include "waveaug/wavelet.hpp"

namespace waveaug::detail {

static const double kDb1[2] = {
    0.70710678118654752440, 0.70710678118654752440,
};
static const double kDb2[4] = {
    -0.12940952255126038117, 0.22414386804201338103, 0.83651630373780790558,
    0.48296291314453414337,
};
static const double kDb3[6] = {
    0.035226291885709536603, -0.085441273882026661693, -0.13501102001025458870,
    0.45987750211849157010, 0.80689150931109257649, 0.33267055295008261600,
};
static const double kDb4[8] = {
    -0.010597401785069032105, 0.032883011666885199735, 0.030841381835560763627,
    -0.18703481171909308408, -0.027983769416859854211, 0.63088076792985890788,
    0.71484657055291564709, 0.23037781330889650086,
};
static const double kDb5[10] = {
    0.0033357252854737712780, -0.012580751999081999469, -0.0062414902127982742742,
    0.077571493840045713523, -0.032244869584638374648, -0.24229488706638203186,
    0.13842814590132073151, 0.72430852843777292773, 0.60382926979718967054,
    0.16010239797419291448,
};
static const double kDb6[12] = {
    -0.0010773010853084795649, 0.0047772575109455106396, 0.00055384220116149613925,
    -0.031582039317486029565, 0.027522865530305728626, 0.097501605587323049102,
    -0.12976686756726193556, -0.22626469396543982008, 0.31525035170919762909,
    0.75113390802109535068, 0.49462389039845308568, 0.11154074335010946362,
};
static const double kDb7[14] = {
    0.00035371379997452024845, -0.0018016407040474909153, 0.00042957797292136652113,
    0.012550998556099840613, -0.016574541630666880654, -0.038029936935014413580,
    0.080612609151083071913, 0.071309219266830264751, -0.22403618499387498264,
    -0.14390600392856497541, 0.46978228740519312247, 0.72913209084623511992,
    0.39653931948191730654, 0.077852054085009179020,
};
static const double kDb8[16] = {
    -0.00011747678412476953373, 0.00067544940645056936637, -0.00039174037337694704630,
    -0.0048703529934515743104, 0.0087460940474057767164, 0.013981027917398281649,
    -0.044088253930794751507, -0.017369301001807546170, 0.12874742662047845886,
    0.00047248457391328277036, -0.28401554296154692652, -0.015829105256349305667,
    0.58535468365420671277, 0.67563073629728980681, 0.31287159091429997066,
    0.054415842243104009955,
};
static const double kDb9[18] = {
    0.000039347320316271599481, -0.00025196318894271013697, 0.00023038576352319596721,
    0.0018476468830562264766, -0.0042815036824634298345, -0.0047232047577513972779,
    0.022361662123679097205, 0.00025094711483145195759, -0.067632829061329973676,
    0.030725681479333379212, 0.14854074933810638014, -0.096840783222976460514,
    -0.29327378327917490881, 0.13319738582500757619, 0.65728807805130053808,
    0.60482312369011111190, 0.24383467461259035373, 0.038077947363878346589,
};
static const double kDb10[20] = {
    -0.000013264202894521244812, 0.000093588670320069591334, -0.00011646685512928545095,
    -0.00068585669495971162656, 0.0019924052951850561172, 0.0013953517470529011658,
    -0.010733175483330575044, 0.0036065535669561696554, 0.033212674059341001740,
    -0.029457536821875812858, -0.071394147166397087145, 0.093057364603572351160,
    0.12736934033579326008, -0.19594627437737704350, -0.24984642432731537942,
    0.28117234366057746075, 0.68845903945360356574, 0.52720118893172558648,
    0.18817680007769148902, 0.026670057900555553587,
};
static const double kDb11[22] = {
    4.4942742772365100954e-6, -0.000034634984186984995541, 0.000054439074699368471674,
    0.00024915252355282349887, -0.00089302325066626461339, -0.00030859285881514316518,
    0.0049284176560590411232, -0.0033408588730144456061, -0.015364820906201599426,
    0.020840904360181063023, 0.031335090219046076031, -0.066438785695025205279,
    -0.046479955116684187272, 0.14981201246637849641, 0.066043588196683191901,
    -0.27423084681794696120, -0.16227524502749036224, 0.41196436894790746293,
    0.68568677491620051112, 0.44989976435604533477, 0.14406702115062451280,
    0.018694297761471084025,
};
static const double kDb12[24] = {
    -1.5290717580685109027e-6, 0.000012776952219379766587, -0.000024241545757030784030,
    -0.000088504109208204324208, 0.00038865306282093144359, 6.5451282125095955665e-6,
    -0.0021795036186277604716, 0.0022486072409952376000, 0.0067114990087955091778,
    -0.012840825198300683295, -0.012218649069748280720, 0.041546277495084440739,
    0.010849130255822184381, -0.096432120096507082027, 0.0053595696743521503283,
    0.18247860592757967985, -0.023779257256069727684, -0.31617845375278553686,
    -0.044763885653774626668, 0.51588647842781560876, 0.65719872257930708930,
    0.37735513521421265709, 0.10956627282118515461, 0.013112257957229517507,
};
static const double kDb13[26] = {
    5.2200350984548646917e-7, -4.7004164793608683257e-6, 0.000010441930571408137082,
    0.000030678537579325493466, -0.00016512898855650548946, 0.000049251525126289461921,
    0.00093232613086726338622, -0.0013156739118922989366, -0.0027619112346568621780,
    0.0072555894016175661945, 0.0039239414487974162433, -0.023831420710323649032,
    0.0023799722540590788115, 0.056139477100283428862, -0.026488406475343694640,
    -0.10580761818793432645, 0.072948933656777163809, 0.17947607942933984323,
    -0.12457673075081525894, -0.31497290771138863300, 0.086985726179647237310,
    0.58888957043121890807, 0.61105585115878765282, 0.31199632216043806340,
    0.082861243872902779644, 0.0092021335389623679730,
};
static const double kDb14[28] = {
    -1.7871399683113590763e-7, 1.7249946753678127699e-6, -4.3897049017813941153e-6,
    -0.000010337209184570773947, 0.000068755042526975096039, -0.000041777245770372597353,
    -0.00038683194731295448211, 0.00070802115423552785864, 0.0010616910856067618430,
    -0.0038496388680221874458, -0.00074621898926838493718, 0.012789493266333408962,
    -0.0056150495303569591332, -0.030185351540390635187, 0.026981408307912916974,
    0.055237126259216044116, -0.071548955504046130736, -0.086748411568169689046,
    0.13998901658446070125, 0.13839521386480659107, -0.21803352999327604476,
    -0.27168855227874804141, 0.21867068775890652149, 0.63118784910485677956,
    0.55430561794089383599, 0.25485026779262135367, 0.062364758849398898328,
    0.0064611534600879478182,
};
static const double kDb15[30] = {
    6.1333599133057520291e-8, -6.3168823258816644212e-7, 1.8112704079405770838e-6,
    3.3629871817375798031e-6, -0.000028133296266047813648, 0.000025792699155318936809,
    0.00015589648992059974795, -0.00035956524436246881216, -0.00037348235413761699201,
    0.0019433239803822115418, -0.00024175649076162428117, -0.0064877345603157449952,
    0.0051010003604075431697, 0.015083918027835902363, -0.020810050169693081678,
    -0.025767007328439962586, 0.054780550584507612689, 0.033877143923507686209,
    -0.11112093603723169337, -0.039666176555790944484, 0.19014671400712298235,
    0.065282952848772816923, -0.28888259656696564625, -0.19320413960914542871,
    0.33900253545473152769, 0.64581314035742435818, 0.49263177170813962361,
    0.20602386398699573154, 0.046743394892766271892, 0.0045385373615788988815,
};
static const double kDb16[32] = {
    -2.1093396301007430970e-8, 2.3087840868575458664e-7, -7.3636567854512055121e-7,
    -1.0435713423116065015e-6, 0.000011336608661276258588, -0.000013945668988208893452,
    -0.000061035966214109358352, 0.00017478724522533818038, 0.00011424152003872239264,
    -0.00094102174935956758893, 0.00040789698084971283624, 0.0031280233812062688317,
    -0.0036442796214983899322, -0.0069900145634139166703, 0.013993768859828731030,
    0.010297659640955969412, -0.036888397691730142334, -0.0075889743688577376385,
    0.075924236044276315821, -0.0062397227524748717657, -0.13238830556381039045,
    0.027340263752716041365, 0.21119069394710428872, -0.027918208133028276683,
    -0.32706331052791770465, -0.089751089402489642857, 0.44029025688635690004,
    0.63735633208378889863, 0.43031272284600381374, 0.16506428348885311790,
    0.034907714323673346410, 0.0031892209253477380298,
};
static const double kDb17[34] = {
    7.2674929685616081109e-9, -8.4239484460026801788e-8, 2.9577009333168567550e-7,
    3.0165496099945574156e-7, -4.5059424772229881941e-6, 6.9906009850767512732e-6,
    0.000023186813798745950845, -0.000082048032024533918391, -0.000025610109566548458827,
    0.00043946542776864367784, -0.00032813251940983797140, -0.0014368453048029761262,
    0.0023012052421535456243, 0.0029679966915260948728, -0.0086029215203228548317,
    -0.0030429899813546370686, 0.022733676583946270318, -0.0032709555358192937817,
    -0.046922438389269737333, 0.022312336178103795953, 0.081105986654160885080,
    -0.057091419631676927289, -0.12681569177828631109, 0.10113548917747027215,
    0.19731058956501099279, -0.12659975221588270287, -0.32832074836396173609,
    0.027314970403293635004, 0.51831576405693783933, 0.61099661568462281819,
    0.37035072415264115045, 0.13121490330782440658, 0.025985393703606043389,
    0.0022418070010373128535,
};
static const double kDb18[36] = {
    -2.5079344549485982672e-9, 3.0688358630451748009e-8, -1.1760987670282316985e-7,
    -7.6916326898851761460e-8, 1.7687129836276154559e-6, -3.3326344788858218888e-6,
    -8.5206025374466952039e-6, 0.000037412378807400381811, -1.5359171235347246751e-7,
    -0.00019864855231174794858, 0.00021358156191034068840, 0.00062846568296514571256,
    -0.0013405962983361066295, -0.0011187326669924970728, 0.0049433436054667381307,
    0.00011863003385811746573, -0.013051480946612001773, 0.0062621679543057074852,
    0.026670705926470590300, -0.023733210395860001033, -0.044526141902982324716,
    0.057051247738536884121, 0.064887216211905442819, -0.10675224665982848559,
    -0.092331884150846280604, 0.16708131276325740451, 0.14953397556537778935,
    -0.21648093400514297112, -0.29365404073655874425, 0.14722311196992814158,
    0.57180165488865133529, 0.57182680776660722348, 0.31467894133703169906,
    0.10358846582242359622, 0.019288531724146377059, 0.0015763102184407604315,
};
static const double kDb19[38] = {
    8.6668488389976193503e-10, -1.1164020670358258164e-8, 4.6369377757826042234e-8,
    1.4470882987978445421e-8, -6.8627556577691427019e-7, 1.5319314766911930639e-6,
    3.0109643162965263397e-6, -0.000016640176297154944546, 5.1059504870738860530e-6,
    0.000087112704672199229654, -0.00012460079173415877534, -0.00026067613567862800573,
    0.00073580252050543520703, 0.00034180865345859577657, -0.0026875518007015820040,
    0.00076895435925754835597, 0.0070407473671052431530, -0.0058669222810121747266,
    -0.013988388678535141633, 0.019375549889176127646, 0.021623767409585047130,
    -0.045674226277230908056, -0.026501236250123040899, 0.086906755555812232488,
    0.027584350625628668750, -0.14278569503873657498, -0.033518541902302878682,
    0.21234974330627848881, 0.074652269708103266368, -0.28583863175582624185,
    -0.22809139421548264637, 0.26089495265103882929, 0.60170454912753789489,
    0.52443637746465491534, 0.26438843174089678467, 0.081278113265459550653,
    0.014281098450764397374, 0.0011086697631817105711,
};
static const double kDb20[40] = {
    -2.9988364896193195664e-10, 4.0561270555518327661e-9, -1.8148432482996959732e-8,
    2.0143220235505126943e-10, 2.6339242262700010841e-7, -6.8470795970005568942e-7,
    -1.0119940100188861503e-6, 7.2412482876736201028e-6, -4.3761438621839968104e-6,
    -0.000037105861833947128642, 0.000067742808283777295580, 0.00010153288973670290508,
    -0.00038510474869921760607, -0.000053497598439976950518, 0.0013925596193231363239,
    -0.00083156217282255691925, -0.0035814942596096227776, 0.0044205423870457909631,
    0.0067216273022594568353, -0.013810526137151920078, -0.0087893249239015613488,
    0.032294299530769581759, 0.0058746818118118264913, -0.061722899624680459733,
    0.0056322468573074355070, 0.10229171917444255789, -0.024716827338613584016,
    -0.15545875070726795593, 0.039850246457771202198, 0.22829105081991632297,
    -0.016727088309077007575, -0.32678680043403496740, -0.13921208801148387258,
    0.36150229873933106292, 0.61049323893859382016, 0.47269618531090169637,
    0.21994211355139704501, 0.063423780459081514976, 0.010549394624950398325,
    0.00077995361366684632159,
};
static const double kDb21[42] = {
    1.0388055710237065530e-10, -1.4719541976503652652e-9, 7.0580335412311218590e-9,
    -2.2540149746733301316e-9, -1.0004008790305973320e-7, 2.9921366304648527944e-7,
    3.1660954423670305566e-7, -3.0900171645456991972e-6, 2.7903305398144870461e-6,
    0.000015354825092760492831, -0.000034996659849874479540, -0.000036355202500863383094,
    0.00019366465041650806153, -0.000031964062776804371937, -0.00069067111708210165073,
    0.00063941850051203021464, 0.0017166070406306241385, -0.0029583740389328312808,
    -0.0028913343485889012474, 0.0089888243819719118753, 0.0024034709208054347624,
    -0.020892053677979079488, 0.0033577563903381108425, 0.039726835427850441752,
    -0.018653859202118515341, -0.064977504893732320633, 0.045723405749228792393,
    0.096600390323724220702, -0.081775942980863828874, -0.13994042493254722492,
    0.11523329843968710420, 0.21156452768087239238, -0.11239707156845098135,
    -0.33566408953052950948, -0.035722919617255290459, 0.44459045192760034036,
    0.60150609493500389756, 0.41968794493936277309, 0.18135962544038151563,
    0.049247771538177274914, 0.0077766390523547837543, 0.00054882250985268370868,
};
static const double kDb22[44] = {
    -3.6021134843395547038e-11, 5.3359388216674899052e-10, -2.7296231466329760834e-9,
    1.6801714049229888856e-9, 3.7612287493373623662e-8, -1.2833362287517544178e-7,
    -8.7798798733612862769e-8, 1.2951820573188775739e-6, -1.5651791319951601593e-6,
    -6.1667293164675783722e-6, 0.000017373756957561893562, 0.000011374349662125931727,
    -0.000094052236348157604218, 0.000043458999045320033790, 0.00032860941421367873420,
    -0.00042378739983918007995, -0.00077069098812311962329, 0.0018270104956572790801,
    0.0010442607391860253234, -0.0054556919861567170766, 0.00030013739850764359512,
    0.012564725218343374069, -0.0062137828493646584991, -0.023480001344493188686,
    0.020586707627565360441, 0.036970846620698020576, -0.046530811827506713479,
    -0.051364254297444132457, 0.084557376366826075034, 0.068076314392732215567,
    -0.13176813768668341075, -0.097110798409114709693, 0.17997318799289130373,
    0.16409318810676648186, -0.20056840610488709393, -0.31272658042829619180,
    0.073724501183630151656, 0.50790109062216390184, 0.57843273100952442714,
    0.36772868344603747886, 0.14836754089011142850, 0.038069937236411084948,
    0.0057218546313345391208, 0.00038626323149109821585,
};
static const double kDb23[46] = {
    1.2502033023510409414e-11, -1.9324051113134175422e-10, 1.0504464536965434041e-9,
    -9.4728859018120505352e-10, -1.3999354954379988451e-8, 5.4175491795392787365e-8,
    1.8530917856339650194e-8, -5.3390054052094211546e-7, 8.1475748347794477781e-7,
    2.3975695468402400574e-6, -8.3478755678546255444e-6, -2.6352078892491862372e-6,
    0.000044260712031092460776, -0.000033788948341209034343, -0.00015002185034903409677,
    0.00025676245200787372056, 0.00031942049270990115037, -0.0010612312288866513211,
    -0.00024650140051635120319, 0.0031228764498181449974, -0.0011348654733562516913,
    -0.0070753192737061528142, 0.0060318406500241628163, 0.012751943931528286462,
    -0.017537101003035845379, -0.018523513650156159798, 0.038495332522569199011,
    0.021765856834499975608, -0.070207391574901109462, -0.021126212356227241007,
    0.11229704361810728870, 0.020283074575649299749, -0.16401132153187592502,
    -0.033037447094289378750, 0.22357365824204023171, 0.092125407082418052606,
    -0.27140209860784305566, -0.26139214803064411189, 0.18139262536384001363,
    0.55101851724191939135, 0.54493114787352042827, 0.31845081385286523634,
    0.12051553178397193363, 0.029310003657884115147, 0.0042027488931838335384,
    0.00027190419412828884142,
};
static const double kDb24[48] = {
    -4.3427825038037102473e-12, 6.9918011576382309741e-11, -4.0246586445843797743e-10,
    4.7483758242562311181e-10, 5.1577767896719996390e-9, -2.2557403881760861074e-8,
    -5.0576454197925003085e-10, 2.1663396532785746392e-7, -4.0325077568799716241e-7,
    -8.9802531439384077241e-7, 3.9011003385977026104e-6, 1.3411577508091147193e-8,
    -0.000020228882926126976829, 0.000021832414604665583634, 0.000065593886393056340853,
    -0.00014600798177626168389, -0.00011812332379695547406, 0.00058612705931831099337,
    -0.000044161848561415200634, -0.0016964568189748243943, 0.0011537649368394815049,
    0.0037360461782825233452, -0.0047465687863231138005, -0.0062914353700181877807,
    0.013049970871085735831, 0.0076617218816465858973, -0.028213107094901890981,
    -0.0049447094281256282998, 0.051301620039980879156, -0.0045784362418192216380,
    -0.082161654208001667023, 0.020980113709144815350, 0.12101630346922423623,
    -0.038777173577920016202, -0.17117535137034688969, 0.042528729641483832581,
    0.23923738878031085520, 0.0047766136843447281880, -0.31794307899936273755,
    -0.18727140688515623770, 0.28098555323371188334, 0.57493922109554199685,
    0.50437104083992499198, 0.27290891606772632687, 0.097262235833625196638,
    0.022482339949716410724, 0.0030820817149054944362, 0.00019143580094755136950,
};
static const double kDb25[50] = {
    1.5096920828239108679e-12, -2.5276251634656448110e-11, 1.5359015701626571970e-10,
    -2.2284749102281688993e-10, -1.8804157550621555372e-9, 9.2792244800813723723e-9,
    -2.6115985561117708643e-9, -8.6569417322785071634e-8, 1.9228067901423716013e-7,
    3.2120375188625190949e-7, -1.7792013326536345626e-6, 5.2328277081530764180e-7,
    8.9906613930625889054e-6, -0.000012771952931997838041, -0.000027330481199600417464,
    0.000079046400039655282551, 0.000035437145232760590053, -0.00030988009909846979895,
    0.00011532124404663004565, 0.00087725819367482748435, -0.00089997742374629504911,
    -0.0018424842902033312808, 0.0033227077739731917801, 0.0027269362587384957399,
    -0.0088607026180463683990, -0.0019894257822027364943, 0.018922804476627628411,
    -0.0030798367948470366616, -0.034042320460653340993, 0.015542605929102291640,
    0.053617909398779499606, -0.037173962861122508876, -0.077084111056574193562,
    0.066752164494018606669, 0.10663380501847795288, -0.098508615289960221537,
    -0.15056021375057963095, 0.11815528671995986046, 0.22453781974510171295,
    -0.087587614587654661402, -0.33647307964174613096, -0.097174640964638142761,
    0.36788507480294669844, 0.58163689674605778335, 0.45968341514609459379,
    0.23169350788602181999, 0.078035862872132675598, 0.017186741254040155338,
    0.0022569595918547795201, 0.00013480297934701889946,
};
static const double kDb26[52] = {
    -5.2518712242444350378e-13, 9.1305100163717962439e-12, -5.8404081853411714685e-11,
    1.0023031910465269135e-10, 6.7800472458286366683e-10, -3.7760104785323243282e-9,
    2.1693282598503231070e-9, 3.4077956212907300087e-8, -8.9044663701685907691e-8,
    -1.0790042375786714119e-7, 7.9392106337099520884e-7, -4.6504632206402626392e-7,
    -3.8874001618567951876e-6, 7.0000786829649867349e-6, 0.000010742215408721950313,
    -0.000041096739963914778163, -5.2777954930378689763e-6, 0.00015747952386074935905,
    -0.00010605747482838038900, -0.00043195570742618074667, 0.00061613822045743441937,
    0.00083834880565436160464, -0.0021455302815676209803, -0.00093905825047382896462,
    0.0056019472394238048532, -0.00052873839926268144392, -0.011785497906193028937,
    0.0058295805553188879719, 0.020734920179963824759, -0.017760903568358183541,
    -0.031378110363067754842, 0.038535715971111864258, 0.042232185796372035412,
    -0.068654759604035915255, -0.053448561681483191495, 0.10648240524980863032,
    0.069823186113292365138, -0.14797719327525449358, -0.10432390028592704391,
    0.18275540958967237465, 0.18129183231112269607, -0.17483996128939250427,
    -0.32638459369178002164, 0.0017740767809866857278, 0.43915831178916623219,
    0.57366904303422226032, 0.41329296227835636861, 0.19503943871677009942,
    0.062274744025149604842, 0.013097554292558500821, 0.0016505202335329882470,
    0.000094937957507105921178,
};

const double* daubechies_dec_lo(int n) {
    static const double* table[] = {
        kDb1, kDb2, kDb3, kDb4, kDb5, kDb6, kDb7, kDb8, kDb9, kDb10, kDb11, kDb12, kDb13, kDb14, kDb15, kDb16, kDb17, kDb18, kDb19, kDb20, kDb21, kDb22, kDb23, kDb24, kDb25, kDb26
    };
    if (n < 1 || n > 26) return nullptr;
    return table[n - 1];
}

}  // namespace waveaug::detail
