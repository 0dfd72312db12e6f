import java.util.ArrayList;
import java.util.Random;

public class Converter168 {
    static boolean even(int x) {
        return x % 2 == 0;
    }

    static void countdown(int remaining) {
        do {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
        }

    public static int search(int[] data, int key) {
        for (int j = 0; j < data.length; j++) {
            if (data[j] == key) {
                return j;
            }
        }
        return -1;
    }

    public static double computeAverage(int[] data) {
        double acc = 0;
        for (int v : data) {
            acc = acc + v;
        }
        return acc / data.length;
    }

    public static double bodyMassIndex(double kg, double meters) {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static ArrayList<Integer> collectEven(int[] data) {
        ArrayList<Integer> list = new ArrayList<>();
        for (int v : data) {
            if (v % 2 == 0) {
                list.add(v);
            }
        }
        return list;
    }

    static int[] randomFill(int size) {
        Random rand = new Random(42);
        int[] data = new int[size];
        for (int j = 0; j < size; j++) {
            data[j] = rand.nextInt(100);
        }
        return data;
    }

    public static void main(String[] args) {
        int[] numbers = {8, 6, 1, 2, 9, 9, 2};
        if (even(5)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        countdown(3);
        int pos = search(numbers, 9);
        System.out.println("Found at " + pos);
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        System.out.println("BMI: " + bodyMassIndex(79.5, 1.80));
        System.out.println("GCD: " + greatestDivisor(41, 41));
        ArrayList<Integer> even = collectEven(numbers);
        System.out.println(even.size() + " even numbers");
        int[] random = randomFill(6);
        System.out.println(random.length);
    }
}
