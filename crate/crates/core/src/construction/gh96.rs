pub(super) const GH_NODES: [f64; 96] = [
    -18.549008962484557, -17.719008048061845, -17.033929049475887, -16.424140084408315,
    -15.863057027087041, -15.336987796461976, -14.837722983890602, -14.359855604375674,
    -13.899587739349906, -13.454123227963489, -13.021328034672976, -12.599526434338053,
    -12.187371799424481, -11.783760994609707, -11.387775573595228, -10.998640145991569,
    -10.615692133275449, -10.23835930672317, -9.866142780555059, -9.498603915558515,
    -9.135354081480578, -8.776046546046572, -8.420369970742689, -8.068043137632507,
    -7.718810631277005, -7.3724392701639925, -7.0287151324257815, -6.687441057230372,
    -6.348434530191148, -6.011525881239924, -5.676556738563255, -5.343378693747909,
    -5.011852142162335, -4.6818452694924995, -4.353233160742004, -4.025897012255864,
    -3.6997234306995206, -3.374603805617098, -3.050433744354203, -2.7271125598734236,
    -2.4045428034012715, -2.082629834989802, -1.7612814260056506, -1.4404073883134991,
    -1.1199192255308021, -0.7997298022200148, -0.4797530272721122, -0.1599035480351621,
    0.1599035480351621, 0.4797530272721122, 0.7997298022200148, 1.1199192255308021,
    1.4404073883134991, 1.7612814260056506, 2.082629834989802, 2.4045428034012715,
    2.7271125598734236, 3.050433744354203, 3.374603805617098, 3.6997234306995206,
    4.025897012255864, 4.353233160742004, 4.6818452694924995, 5.011852142162335,
    5.343378693747909, 5.676556738563255, 6.011525881239924, 6.348434530191148,
    6.687441057230372, 7.0287151324257815, 7.3724392701639925, 7.718810631277005,
    8.068043137632507, 8.420369970742689, 8.776046546046572, 9.135354081480578,
    9.498603915558515, 9.866142780555059, 10.23835930672317, 10.615692133275449,
    10.998640145991569, 11.387775573595228, 11.783760994609707, 12.187371799424481,
    12.599526434338053, 13.021328034672976, 13.454123227963489, 13.899587739349906,
    14.359855604375674, 14.837722983890602, 15.336987796461976, 15.863057027087041,
    16.424140084408315, 17.033929049475887, 17.719008048061845, 18.549008962484557,
];

pub(super) const GH_WEIGHTS: [f64; 96] = [
    7.420995175863828e-76, 1.9638544529325144e-69, 2.5211953582873406e-64, 6.168750025244182e-60,
    4.927481091514544e-56, 1.7051467545730293e-52, 3.0371580643523696e-49, 3.1239542947499478e-46,
    2.0135579608787567e-43, 8.642250199792758e-41, 2.588164235426799e-38, 5.611880983044807e-36,
    9.07709505167934e-34, 1.1224816337266545e-31, 1.083227473490503e-29, 8.30059160199036e-28,
    5.1262071745377037e-26, 2.5843274261892357e-24, 1.0754921419892883e-22, 3.7309581702805294e-21,
    1.0882536241221193e-19, 2.6893964933142535e-18, 5.669570176081598e-17, 1.0257920845523481e-15,
    1.6016029944695353e-14, 2.1685651916482644e-13, 2.5576425430021274e-12, 2.6381563523338893e-11,
    2.3885495136294677e-10, 1.9044697436851118e-09, 1.3412852546444989e-08, 8.366758910238345e-08,
    4.633996277892734e-07, 2.2839709912385427e-06, 1.0037951571563156e-05, 3.9411082217868695e-05,
    0.00013846233153272063, 0.0004359469338436625, 0.0012317003204237987, 0.003126530649363787,
    0.007137774056197171, 0.014669121149733375, 0.027160033930641536, 0.045334861632414604,
    0.06825741431897206, 0.09274127533110009, 0.11374796211265745, 0.12596662157577185,
    0.12596662157577185, 0.11374796211265745, 0.09274127533110009, 0.06825741431897206,
    0.045334861632414604, 0.027160033930641536, 0.014669121149733375, 0.007137774056197171,
    0.003126530649363787, 0.0012317003204237987, 0.0004359469338436625, 0.00013846233153272063,
    3.9411082217868695e-05, 1.0037951571563156e-05, 2.2839709912385427e-06, 4.633996277892734e-07,
    8.366758910238345e-08, 1.3412852546444989e-08, 1.9044697436851118e-09, 2.3885495136294677e-10,
    2.6381563523338893e-11, 2.5576425430021274e-12, 2.1685651916482644e-13, 1.6016029944695353e-14,
    1.0257920845523481e-15, 5.669570176081598e-17, 2.6893964933142535e-18, 1.0882536241221193e-19,
    3.7309581702805294e-21, 1.0754921419892883e-22, 2.5843274261892357e-24, 5.1262071745377037e-26,
    8.30059160199036e-28, 1.083227473490503e-29, 1.1224816337266545e-31, 9.07709505167934e-34,
    5.611880983044807e-36, 2.588164235426799e-38, 8.642250199792758e-41, 2.0135579608787567e-43,
    3.1239542947499478e-46, 3.0371580643523696e-49, 1.7051467545730293e-52, 4.927481091514544e-56,
    6.168750025244182e-60, 2.5211953582873406e-64, 1.9638544529325144e-69, 7.420995175863828e-76,
];
