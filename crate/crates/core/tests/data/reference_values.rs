// Frozen reference values from an independent 60-digit mpmath computation
// (Bessel-function forms of the solutions, numerically differentiated Wronskians).

pub const ENTIRE: &[([f64; 2], [f64; 2], [f64; 2])] = &[
    ([0.5, 0.0], [0.7602445970756302, 0.0], [0.9187253698655684, 0.0]),
    ([-3.0, 0.0], [2.914577440175928, 0.0], [1.580586563566668, 0.0]),
    ([25.0, 0.0], [0.28366218546322625, 0.0], [-0.1917848549326277, 0.0]),
    ([900.0, 0.0], [0.15425144988758405, 0.0], [-0.03293438746976206, 0.0]),
    ([-400.0, 0.0], [242582597.70489514, 0.0], [12129129.885244757, 0.0]),
    ([9000.0, 0.0], [0.8135586494811995, 0.0], [0.006129367593392095, 0.0]),
    ([3.0, 4.0], [-0.64214812471552, -1.0686074213827783], [0.4634364484405575, -0.4762463537409256]),
    ([-50.0, 10.0], [464.8374431620511, -394.4213209457043], [70.22239486315557, -48.55215613623108]),
    ([0.0, 9000.0], [-3.0310090729868676e+28, 6.0839788720006655e+28], [-6.793910886361079e+26, 2.275549334616241e+26]),
    ([-2000.0, -700.0], [3.6098050343925975e+18, 2.5324413604148445e+19], [1.6948402700207882e+17, 5.292307105477742e+17]),
];

pub const XKAPPA: &[([f64; 2], [f64; 2], [f64; 2])] = &[
    ([0.0, 0.0], [0.1, 0.0], [0.975155816649713, 0.0]),
    ([0.0, 0.0], [-5.0, 2.0], [2.606507031367285, -0.8801277902772178]),
    ([0.0, 0.0], [30.0, 0.0], [-0.014633621745636547, 0.0]),
    ([0.0, 0.0], [0.0, 300.0], [15139.383488904276, 13196.554260189874]),
    ([0.0, 0.0], [-200.0, 0.0], [148419.06884618208, 0.0]),
    ([0.0, 0.0], [900.0, 0.0], [-0.08636798358104021, 0.0]),
    ([0.0, 0.0], [4000.0, -3000.0], [-216224947.9866432, -113225687.68803965]),
    ([0.3, 0.0], [0.1, 0.0], [0.8877357665044873, 0.0]),
    ([0.3, 0.0], [-5.0, 2.0], [1.9895405573899803, -0.5742562358277216]),
    ([0.3, 0.0], [30.0, 0.0], [-0.09911412926037484, 0.0]),
    ([0.3, 0.0], [0.0, 300.0], [4951.888928290311, 6934.087392656594]),
    ([0.3, 0.0], [-200.0, 0.0], [66819.0419706996, -1.4768942525658597e-57]),
    ([0.3, 0.0], [900.0, 0.0], [-0.04690044270419716, 0.0]),
    ([0.3, 0.0], [4000.0, -3000.0], [-67615079.54223105, -7350036.20167769]),
    ([1.5, 0.0], [0.1, 0.0], [0.26331138612059507, 0.0]),
    ([1.5, 0.0], [-5.0, 2.0], [0.4200385345099393, -0.07486199109791547]),
    ([1.5, 0.0], [30.0, 0.0], [-0.021919100799796122, 0.0]),
    ([1.5, 0.0], [0.0, 300.0], [-72.61903840782553, 256.0212175483436]),
    ([1.5, 0.0], [-200.0, 0.0], [2569.7003326196823, 0.0]),
    ([1.5, 0.0], [900.0, 0.0], [-0.0001659474329204252, 2.6916662322660342e-80]),
    ([1.5, 0.0], [4000.0, -3000.0], [-79055.99826942656, 400739.5610495446]),
    ([0.0, 0.5], [0.1, 0.0], [1.18130945981588, -0.1094675114197111]),
    ([0.0, 0.5], [-5.0, 2.0], [2.0132025324530383, -1.845394734862199]),
    ([0.0, 0.5], [30.0, 0.0], [-0.24060969303454613, -0.17209018569424026]),
    ([0.0, 0.5], [0.0, 300.0], [10392.613549796399, -8819.223077674997]),
    ([0.0, 0.5], [-200.0, 0.0], [36508.79269883517, -145270.39464225245]),
    ([0.0, 0.5], [900.0, 0.0], [-0.08582579259165563, 0.12722120850701216]),
    ([0.0, 0.5], [4000.0, -3000.0], [35443215.21880118, 454648005.6365845]),
    ([-0.7, 0.0], [0.1, 0.0], [0.49820892603610706, 0.0]),
    ([-0.7, 0.0], [-5.0, 2.0], [3.8225318221625306, -2.0257669817083017]),
    ([-0.7, 0.0], [30.0, 0.0], [1.0013658916011008, 0.0]),
    ([-0.7, 0.0], [0.0, 300.0], [144591.0425090536, 22849.973110128016]),
    ([-0.7, 0.0], [-200.0, 0.0], [931192.0009242976, 5.706203559367926e-57]),
    ([-0.7, 0.0], [900.0, 0.0], [0.7177292668936014, 0.0]),
    ([-0.7, 0.0], [4000.0, -3000.0], [-1005309444.1797451, -4698709897.104339]),
    ([2.0, 1.0], [0.1, 0.0], [-0.010109754092970652, -0.1501033074662328]),
    ([2.0, 1.0], [-5.0, 2.0], [-0.06684072079848466, -0.19885323142865713]),
    ([2.0, 1.0], [30.0, 0.0], [0.017584162316044864, 0.00304891971240223]),
    ([2.0, 1.0], [0.0, 300.0], [23.71438277051209, -20.370552968962038]),
    ([2.0, 1.0], [-200.0, 0.0], [-625.2230922542326, -225.41142396584652]),
    ([2.0, 1.0], [900.0, 0.0], [-0.00027795887792964887, -0.00022535269010545963]),
    ([2.0, 1.0], [4000.0, -3000.0], [-164571.38294355784, -3343.254515018416]),
];

pub const SOLUTIONS: &[(f64, [f64; 2], f64, f64, [f64; 2], [f64; 2], [f64; 2])] = &[
    (-2.0, [0.0, 0.0], 1e-05, 0.0, [0.06302822700262545, 0.0], [-0.013480741368779815, 0.0], [0.06302822700262545, 0.0]),
    (-2.0, [0.0, 0.0], 4.5, -1.1, [42.18990641241875, 0.0], [9.438703497283392, 0.0], [10.72533588576467, 0.0]),
    (-2.0, [1.0, 0.0], 2.0, 1.5707963267948966, [14.115560105491197, 0.0], [16.520933580087572, 0.0], [16.520933580087576, 0.0]),
    (-2.0, [-1.0, 0.0], 0.3, 0.5235987755982988, [-6.786352082969292, 5.1313780244744e-61], [-8.776152300145686, 5.0120709748235196e-61], [-10.26522945294969, 6.949939213027797e-61]),
    (-2.0, [3.0, 2.0], 1e-05, 0.0, [0.06302822700056178, -1.3757781340890504e-12], [-0.01348074137061937, -1.2263698504081971e-12], [0.06302822700056178, -1.3757781340890504e-12]),
    (-2.0, [3.0, 2.0], 4.5, -1.1, [13.783868207811185, 69.34345599075914], [68.14360015252248, -16.966084618703412], [-54.4777688397071, 46.57422216726715]),
    (-2.0, [-40.0, 0.0], 2.0, 1.5707963267948966, [-181798.98412616088, 0.0], [-300882.3823593602, 0.0], [-300882.3823593602, 0.0]),
    (-2.0, [0.0, 400.0], 0.3, 0.5235987755982988, [-43.9108566269695, 61.3741070033055], [58.769989912885364, 27.762954876527456], [-8.642922384449177, 67.03301323771072]),
    (-0.5, [0.0, 0.0], 1e-05, 0.0, [-0.019090158380843356, 0.0], [-0.008054192221049169, 0.0], [-0.019090158380843356, 0.0]),
    (-0.5, [0.0, 0.0], 4.5, -1.1, [11.028041787183689, 0.0], [7.523743071773344, 0.0], [-1.7029382191899238, 0.0]),
    (-0.5, [1.0, 0.0], 2.0, 1.5707963267948966, [4.287053327044889, 0.0], [2.495927286248433, 0.0], [2.495927286248433, 0.0]),
    (-0.5, [-1.0, 0.0], 0.3, 0.5235987755982988, [-3.302844606374492, 9.256843565710225e-62], [1.4954740096247303, 0.0], [-2.1126103290603595, 8.016661686763581e-62]),
    (-0.5, [3.0, 2.0], 1e-05, 0.0, [-0.019090158380242885, 4.003133534262319e-13], [-0.008054192220103595, 6.303830323123617e-13], [-0.019090158380242885, 4.003133534262319e-13]),
    (-0.5, [3.0, 2.0], 4.5, -1.1, [10.811068736691308, 14.941804570377547], [11.806639460629874, -13.916680317837542], [-5.618305137476627, 19.180192527101156]),
    (-0.5, [-40.0, 0.0], 2.0, 1.5707963267948966, [-234026.41105763515, 9.09984749883578e-57], [51402.26968555663, 9.758882862859209e-57], [51402.26968555662, 9.758882862859209e-57]),
    (-0.5, [0.0, 400.0], 0.3, 0.5235987755982988, [29.890262195310545, -11.253903603382264], [4.267432741638865, -18.939258337330397], [28.019442757735987, -19.215795580935474]),
    (0.0, [0.0, 0.0], 1e-05, 0.0, [-0.07354734928627013, 0.0], [0.009934588265796102, 0.0], [-0.07354734928627013, 0.0]),
    (0.0, [0.0, 0.0], 4.5, -1.1, [5.88940419488769, 0.0], [6.664324407237549, 0.0], [-3.2678840612585858, 0.0]),
    (0.0, [1.0, 0.0], 2.0, 1.5707963267948966, [2.267539368066652, 0.0], [0.9947205226575789, 0.0], [0.9947205226575792, 0.0]),
    (0.0, [-1.0, 0.0], 0.3, 0.5235987755982988, [-1.5034546688700354, 2.589943053223162e-61], [1.7596557130134982, 1.0877254542311628e-86], [-0.4222020801730229, 2.242956478446291e-61]),
    (0.0, [3.0, 2.0], 1e-05, 0.0, [-0.07354734928027974, 3.993595230174656e-12], [0.009934588265051008, -4.967294132711778e-13], [-0.07354734928027974, 3.993595230174656e-12]),
    (0.0, [3.0, 2.0], 4.5, -1.1, [6.976844898871285, 6.965241329636695], [3.548713328705614, -10.213432239902067], [0.0020303486252798235, 12.26169243560581]),
    (0.0, [-40.0, 0.0], 2.0, 1.5707963267948966, [-184164.5050793634, -6.328078815749413e-57], [156841.62721938072, 6.421036182646221e-82], [156841.6272193807, -3.87483072680881e-73]),
    (0.0, [0.0, 400.0], 0.3, 0.5235987755982988, [22.760172265460493, -31.683587027871024], [-15.242691750106589, 12.621053597077983], [12.089541501345511, -21.128264450612413]),
    (5e-05, [0.0, 0.0], 1e-05, 0.0, [-0.07362256254927467, 0.0], [0.009967578639326145, 0.0], [-0.07362256254927467, 0.0]),
    (5e-05, [0.0, 0.0], 4.5, -1.1, [5.888978292517995, 0.0], [6.664234363180655, 0.0], [-3.267997000995351, 0.0]),
    (5e-05, [1.0, 0.0], 2.0, 1.5707963267948966, [2.267369708221817, 0.0], [0.9946152150267689, 0.0], [0.994615215026769, 0.0]),
    (5e-05, [-1.0, 0.0], 0.3, 0.5235987755982988, [-1.5033030983361921, 8.189682209825607e-62], [1.7596283352771245, -1.1068489825499259e-64], [-0.4220845051084363, 7.086938597717706e-62]),
    (5e-05, [3.0, 2.0], 1e-05, 0.0, [-0.07362256254327679, 3.998592891536365e-12], [0.009967578638578105, -4.986929936143057e-13], [-0.07362256254327679, 3.998592891536365e-12]),
    (5e-05, [3.0, 2.0], 4.5, -1.1, [6.976456214863666, 6.964624077641532], [3.5480737326618734, -10.21305744362387], [0.002424055768611791, 12.261078431293209]),
    (5e-05, [-40.0, 0.0], 2.0, 1.5707963267948966, [-184157.98593986742, -8.01126123131439e-57], [156851.41797130316, 5.76623258643321e-59], [156851.41797130316, 5.766232586433162e-59]),
    (5e-05, [0.0, 400.0], 0.3, 0.5235987755982988, [22.75893871039764, -31.68471502942445], [-15.243992011821668, 12.625236854326582], [12.087823080466574, -21.12714969998889]),
    (-3e-05, [0.0, 0.0], 1e-05, 0.0, [-0.07350223988250257, 0.0], [0.009914810121332928, 0.0], [-0.07350223988250257, 0.0]),
    (-3e-05, [0.0, 0.0], 4.5, -1.1, [5.889659743950261, 0.0], [6.664378433334048, 0.0], [-3.2678162936498043, 0.0]),
    (-3e-05, [1.0, 0.0], 2.0, 1.5707963267948966, [2.267641166971322, 0.0], [0.9947837109081161, 0.0], [0.9947837109081163, 0.0]),
    (-3e-05, [-1.0, 0.0], 0.3, 0.5235987755982988, [-1.5035456144751118, -1.4202549982032491e-59], [1.7596721353754747, -1.9092207296547994e-63], [-0.4222726301963933, -1.2300723693323187e-59]),
    (-3e-05, [3.0, 2.0], 1e-05, 0.0, [-0.07350223987651668, 3.990598271182197e-12], [0.009914810120589599, -4.955524581747494e-13], [-0.07350223987651668, 3.990598271182197e-12]),
    (-3e-05, [3.0, 2.0], 4.5, -1.1, [6.977078109786017, 6.965611696574491], [3.549097102561278, -10.21365711821069], [0.0017941101069095557, 12.262060845816062]),
    (-3e-05, [-40.0, 0.0], 2.0, 1.5707963267948966, [-184168.41642117666, 9.307783156224813e-55], [156835.75268584254, -6.256134486932847e-59], [156835.75268584254, -6.256134486927147e-59]),
    (-3e-05, [0.0, 400.0], 0.3, 0.5235987755982988, [22.760912363473352, -31.68291012195858], [-15.241911517656405, 12.618543729597304], [12.09057256125103, -21.12893316663661]),
    (0.25, [0.0, 0.0], 1e-05, 0.0, [-1.1283678833038415, 0.0], [1.1283904508871836, 0.0], [-1.1283678833038415, 0.0]),
    (0.25, [0.0, 0.0], 4.5, -1.1, [3.949327084834294, 0.0], [6.206085419025319, 0.0], [-3.739509554683504, 0.0]),
    (0.25, [1.0, 0.0], 2.0, 1.5707963267948966, [1.4956036939361523, 0.0], [0.5564608523111586, 0.0], [0.5564608523111586, 0.0]),
    (0.25, [-1.0, 0.0], 0.3, 0.5235987755982988, [-0.8359238468220165, 0.0], [1.5231525569891522, 0.0], [0.03764499151749794, 0.0]),
    (0.25, [3.0, 2.0], 1e-05, 0.0, [-1.1283678831345854, 1.1283754057752036e-10], [1.128390450717926, -1.128382928302984e-10], [-1.1283678831345854, 1.1283754057752036e-10]),
    (0.25, [3.0, 2.0], 4.5, -1.1, [5.0577221734002675, 4.269328139303121], [0.7529912958773746, -8.364104907707858], [1.6230917761543884, 9.39070253915619]),
    (0.25, [-40.0, 0.0], 2.0, 1.5707963267948966, [-147950.81566068865, 0.0], [203523.83791551564, 0.0], [203523.83791551564, 0.0]),
    (0.25, [0.0, 400.0], 0.3, 0.5235987755982988, [15.910137173309945, -34.39284107509488], [-19.64268377265007, 35.612461575200186], [3.9572410834565193, -11.978843291752979]),
    (0.7, [0.0, 0.0], 1e-05, 0.0, [-4.59452524305013, 0.0], [17.51254465654478, 0.0], [-4.59452524305013, 0.0]),
    (0.7, [0.0, 0.0], 4.5, -1.1, [1.2892875219344997, 0.0], [5.351954861820066, 0.0], [-4.184885744218742, 0.0]),
    (0.7, [1.0, 0.0], 2.0, 1.5707963267948966, [0.4638133257999699, 0.0], [0.11979789500860662, 0.0], [0.11979789500860664, 0.0]),
    (0.7, [-1.0, 0.0], 0.3, 0.5235987755982988, [-0.12623185127815428, 8.656729457943432e-64], [0.7595569775470415, -5.85595255311664e-63], [0.2704584987998999, -2.178281514131509e-63]),
    (0.7, [3.0, 2.0], 1e-05, 0.0, [-4.594525240940484, 1.4064301528077946e-09], [17.51254464850363, -5.36076508216146e-09], [-4.594525240940484, 1.4064301528077946e-09]),
    (0.7, [3.0, 2.0], 4.5, -1.1, [1.8555950942455925, 1.123528027709765], [-2.5230667731493517, -5.284111603091847], [3.0902664158432875, 5.218867107743562]),
    (0.7, [-40.0, 0.0], 2.0, 1.5707963267948966, [-65698.43886603565, -9.287929144637151e-58], [274383.98642544134, 3.99747933466375e-57], [274383.98642544134, 3.99747933466375e-57]),
    (0.7, [0.0, 400.0], 0.3, 0.5235987755982988, [3.7741254812769656, -22.131035797002923], [-15.522262612072483, 84.44762432403299], [-4.492642762180217, 23.057772949749165]),
    (0.95, [0.0, 0.0], 1e-05, 0.0, [-0.4864256343016608, 0.0], [12.223458018539633, 0.0], [-0.4864256343016608, 0.0]),
    (0.95, [0.0, 0.0], 4.5, -1.1, [0.19176522566519916, 0.0], [4.8695663495799595, 0.0], [-4.2528094084671215, 0.0]),
    (0.95, [1.0, 0.0], 2.0, 1.5707963267948966, [0.06616876911809888, 0.0], [0.01307309980485781, 0.0], [0.013073099804857814, 0.0]),
    (0.95, [-1.0, 0.0], 0.3, 0.5235987755982988, [-0.003327156683022458, -1.4867581834730207e-65], [0.2642578730396601, 4.293195450834788e-65], [0.12924753430996141, 8.590273692453521e-66]),
    (0.95, [3.0, 2.0], 1e-05, 0.0, [-0.48642563286085877, 9.605346981204164e-10], [12.223457982333516, -2.4137411122190096e-08], [-0.48642563286085877, 9.605346981204164e-10]),
    (0.95, [3.0, 2.0], 4.5, -1.1, [0.2910198831439555, 0.14194028847014978], [-3.5567693897974433, -3.7825801440823374], [3.301824548480525, 3.4354468287525113]),
    (0.95, [-40.0, 0.0], 2.0, 1.5707963267948966, [-11496.942316317463, 1.1754849643302238e-59], [305215.5756533124, -2.4185939069421146e-58], [305215.5756533124, -2.4185939069421146e-58]),
    (0.95, [0.0, 400.0], 0.3, 0.5235987755982988, [0.2132591797342312, -4.502195129898709], [-6.018162104305018, 113.12941121735196], [-2.824393184912433, 52.66569025338911]),
];

pub const WEYL: &[(f64, f64, f64, f64, [f64; 2])] = &[
    (-1.0, 1.0, 1.5707963267948966, 0.01, [-0.06631310801504535, 0.01270796071662862]),
    (-1.0, 1.0, 1.5707963267948966, 0.5, [0.4275280504128261, 0.1291890281683805]),
    (-1.0, 1.0, 1.5707963267948966, 3.0, [-0.09547285494702627, 0.08867757310920797]),
    (-1.0, 2.0, 0.7853981633974483, 0.01, [-0.09255260652712648, -0.0047723947408812376]),
    (-1.0, 2.0, 0.7853981633974483, 0.5, [0.40243572404335415, 0.36001865721008947]),
    (-1.0, 2.0, 0.7853981633974483, 3.0, [-0.06258536918440052, -0.1844860107226332]),
    (-1.0, 0.5, 3.141592653589793, 0.01, [-0.042117388355211595, 1.8837867247818254e-18]),
    (-1.0, 0.5, 3.141592653589793, 0.5, [0.3717488043066642, 2.0348938103219276e-18]),
    (-1.0, 0.5, 3.141592653589793, 3.0, [0.13941902461328132, 2.0539975029109416e-17]),
    (-1.0, 10.0, 4.0, 0.01, [-0.03691467849862649, 0.01758819046111184]),
    (-1.0, 10.0, 4.0, 0.5, [0.08994199529129947, -0.08524131062879677]),
    (-1.0, 10.0, 4.0, 3.0, [-6.487456969647165e-05, 0.00010010427569851967]),
    (-1.0, 100.0, -0.3, 0.01, [0.0652408777154983, -0.12699336179936493]),
    (-1.0, 100.0, -0.3, 0.5, [0.6933957469916754, -0.4777741773109676]),
    (-1.0, 100.0, -0.3, 3.0, [21.504523400267214, -27.839584550349613]),
    (0.0, 1.0, 1.5707963267948966, 0.01, [0.47211213356285414, 0.07852551357321916]),
    (0.0, 1.0, 1.5707963267948966, 0.5, [0.6052168462324722, 0.4748799707219837]),
    (0.0, 1.0, 1.5707963267948966, 3.0, [-0.11609803767456724, 0.0885457005462939]),
    (0.0, 2.0, 0.7853981633974483, 0.01, [0.43743797443941224, 0.11778655784765338]),
    (0.0, 2.0, 0.7853981633974483, 0.5, [0.30610441597614263, 0.6733929400852364]),
    (0.0, 2.0, 0.7853981633974483, 3.0, [-0.04643037643730535, -0.19980728157647276]),
    (0.0, 0.5, 3.141592653589793, 0.01, [0.5067751138124176, 6.122381685226664e-18]),
    (0.0, 0.5, 3.141592653589793, 0.5, [0.8652634543904573, 3.871507962036765e-17]),
    (0.0, 0.5, 3.141592653589793, 3.0, [0.17009184624471718, 2.6863377810308433e-17]),
    (0.0, 10.0, 4.0, 0.01, [0.35706371125100717, -0.042840911967298244]),
    (0.0, 10.0, 4.0, 0.5, [0.10400651670179263, -0.11851344366294642]),
    (0.0, 10.0, 4.0, 3.0, [-6.581956151266093e-05, 0.00010618517199341597]),
    (0.0, 100.0, -0.3, 0.01, [0.2409087269014778, 0.17192108427992436]),
    (0.0, 100.0, -0.3, 0.5, [0.7336252950748381, -0.40449344441626234]),
    (0.0, 100.0, -0.3, 3.0, [21.913604847600826, -27.41890943445887]),
    (0.25, 1.0, 1.5707963267948966, 0.01, [1.1463562270634915, 0.4843610786795917]),
    (0.25, 1.0, 1.5707963267948966, 0.5, [0.646175695288155, 0.5974675389676652]),
    (0.25, 1.0, 1.5707963267948966, 3.0, [-0.12161155652814762, 0.08821756103627655]),
    (0.25, 2.0, 0.7853981633974483, 0.01, [0.8638792343907323, 0.5936967902283106]),
    (0.25, 2.0, 0.7853981633974483, 0.5, [0.259379884679144, 0.7610643236669771]),
    (0.25, 2.0, 0.7853981633974483, 3.0, [-0.0420308711232729, -0.20352515942650512]),
    (0.25, 0.5, 3.141592653589793, 0.01, [1.479948189358194, 4.595113037378057e-17]),
    (0.25, 0.5, 3.141592653589793, 0.5, [1.0465769145982495, 5.469941715092175e-17]),
    (0.25, 0.5, 3.141592653589793, 3.0, [0.17866509633730782, 2.867745929039937e-17]),
    (0.25, 10.0, 4.0, 0.01, [0.6671272317644987, -0.15462903923545793]),
    (0.25, 10.0, 4.0, 0.5, [0.10758976984291663, -0.12820048060399405]),
    (0.25, 10.0, 4.0, 3.0, [-6.604401103050287e-05, 0.00010775156134120088]),
    (0.25, 100.0, -0.3, 0.01, [0.23096583025877568, 0.3293934073434262]),
    (0.25, 100.0, -0.3, 0.5, [0.7425454955136154, -0.3855695848840477]),
    (0.25, 100.0, -0.3, 3.0, [22.014651102227724, -27.31281968011261]),
    (0.6, 1.0, 1.5707963267948966, 0.01, [2.9647699364625466, 2.069372163342601]),
    (0.6, 1.0, 1.5707963267948966, 0.5, [0.6975311899107323, 0.7987397213587425]),
    (0.6, 1.0, 1.5707963267948966, 3.0, [-0.1295757185450369, 0.08753804932115151]),
    (0.6, 2.0, 0.7853981633974483, 0.01, [1.688334224379154, 2.1914988292713504]),
    (0.6, 2.0, 0.7853981633974483, 0.5, [0.17542330381320287, 0.8886631282880465]),
    (0.6, 2.0, 0.7853981633974483, 3.0, [-0.03562557378430886, -0.2086409733385977]),
    (0.6, 0.5, 3.141592653589793, 0.01, [4.727840840946984, 2.245236869959465e-16]),
    (0.6, 0.5, 3.141592653589793, 0.5, [1.3518599477403985, 8.360029941940693e-17]),
    (0.6, 0.5, 3.141592653589793, 3.0, [0.19133182995834647, 3.139103100903867e-17]),
    (0.6, 10.0, 4.0, 0.01, [1.3929985559737568, -0.486515965511653]),
    (0.6, 10.0, 4.0, 0.5, [0.11262219658686588, -0.1427856465366098]),
    (0.6, 10.0, 4.0, 3.0, [-6.63498181429224e-05, 0.0001099761871571291]),
    (0.6, 100.0, -0.3, 0.01, [0.13372372924566434, 0.6097850971898281]),
    (0.6, 100.0, -0.3, 0.5, [0.7542467601384396, -0.35870898328951867]),
    (0.6, 100.0, -0.3, 3.0, [22.155288614466876, -27.163683048146176]),
    (-3.0, 1.0, 1.5707963267948966, 0.01, [0.007490764283460192, -0.021860473913857818]),
    (-3.0, 1.0, 1.5707963267948966, 0.5, [0.1252678546147347, -0.11271218834664694]),
    (-3.0, 1.0, 1.5707963267948966, 3.0, [-0.06073542654964764, 0.08440702222971763]),
    (-3.0, 2.0, 0.7853981633974483, 0.01, [0.03817990993096234, -0.02977202208857717]),
    (-3.0, 2.0, 0.7853981633974483, 0.5, [0.32225933791007494, -0.05332741479190602]),
    (-3.0, 2.0, 0.7853981633974483, 3.0, [-0.08821876530800718, -0.15242141872090334]),
    (-3.0, 0.5, 3.141592653589793, 0.01, [-0.0038071654648134884, -1.2669609824462123e-18]),
    (-3.0, 0.5, 3.141592653589793, 0.5, [0.015170962762159599, -9.208421367062278e-18]),
    (-3.0, 0.5, 3.141592653589793, 3.0, [0.09261908803972284, 1.1522378646921592e-17]),
    (-3.0, 10.0, 4.0, 0.01, [0.01220635582582098, -0.006688316866968941]),
    (-3.0, 10.0, 4.0, 0.5, [0.06428926358044766, -0.03982673393452634]),
    (-3.0, 10.0, 4.0, 3.0, [-6.278505029522758e-05, 8.879171573750999e-05]),
    (-3.0, 100.0, -0.3, 0.01, [-0.11243982143771289, 0.051465741100730385]),
    (-3.0, 100.0, -0.3, 0.5, [0.5925936542386985, -0.6106546416446222]),
    (-3.0, 100.0, -0.3, 3.0, [20.663134442287266, -28.662795860679424]),
];

pub const R_AND_M: &[(f64, f64, f64, f64, [f64; 2], [f64; 2])] = &[
    (-1.0, 0.5235987755982988, 1.0, 1.5707963267948966, [3.0483214430819063, 3.775265376866066], [-0.001252429574824767, 0.0042316695537973]),
    (0.0, 0.0, 2.0, 0.7853981633974483, [-0.6931471805599453, 2.356194490192345], [0.018288440125556176, 0.06216734781094795]),
    (0.25, 1.0, 3.0, 0.0, [1.4462809276037298, 0.6535603838680367], [-0.04769252025967222, 0.19850173298482462]),
    (0.6, -0.4, 0.1, 2.0, [-0.4581750151617251, 0.09313755872949996], [4.387908818152981, 2.720000874178201]),
    (-3.0, 2.5, 50.0, 4.5, [-12.054463462762985, -8.17149826039172], [1.9104772144500162e-05, -0.00010645789853052187]),
    (0.0, 1.5707963267948966, 1.0, 0.0, [3.141592653589793, 1.92367069372179e-16], [7.095333986489393e-39, 0.05066059182116889]),
    (0.9, 0.3, 0.001, 1.0, [5.4693574615132405, 8.80772727876008], [-43.636006993830144, 0.025954745218803532]),
    (-0.2, -1.3, 1000.0, -1.0, [-2.320790997229888, -3.450119477738997], [-0.022721528048575974, 0.04694151398229115]),
    (0.5, 0.0, 0.5, 3.141592653589793, [0.3108581795018333, 5.601727328894426e-17], [-3.316356770684208, 5.631130760254834e-16]),
    (-0.5, 1.5707963267948966, 7.0, 3.141592653589793, [2.957696885576312, 1.0526050736279864e-16], [-0.012307675083191237, 1.0863435643998235e-18]),
];

pub const EIGEN: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.0, -1.0, 0.5),
    (0.5, 0.0, -1.0, 7.0804735365386104),
    (0.25, 0.5235987755982988, -13.928203230275503, 43.756740945939136),
    (-1.0, 0.5235987755982988, -2.648423729825664, 0.05958079625358618),
    (-1.0, 1.5707963267948966, -23.140692632779267, 0.5943134929678028),
    (-0.5, -0.9, -0.10640548948338494, 0.01169191899648709),
    (-2.0, 1.0, -4.051205697082517, 0.01005870153972266),
];

